"""Graph products of graded algebras and their Hilbert series, by three
independent routes."""

from graphprod.complex import path, square
from graphprod.exactmath import RationalFunction
from graphprod.galg import GraphProductAlgebra, exterior, free
from graphprod.torform import ep_series_AK, ep_series_Aprime

K = square()
A = free(1)
P = GraphProductAlgebra(K, A)

# Route 1: count normal-form monomials degree by degree.
census = P.basis_counts(8)
# Route 2: homology of full subcomplexes gives 1/P(A'), and P(A^K) = P(A') * prod P(A_i).
ep = ep_series_AK(K, A, 8).as_ints()
# Route 3: the rational function 1/(1 - 2t)^2.
closed = RationalFunction((1,), (1, -4, 4)).expand(8).as_ints()
print("census     ", census)
print("homological", ep)
print("rational   ", closed)

print("1/P(A') for the square:", ep_series_Aprime(K, A, 8).inverse.as_ints())

# Monomials in degree 2, written element@vertex; x@1 x@3 and x@3 x@1 differ
# since 1 and 3 do not commute, while x@2 x@1 is rewritten to x@1 x@2.
print("degree-2 basis:", [" ".join(f"{x}@{v}" for v, x in m) for m in P.basis_monomials(2)])

# Odd generators anticommute across an edge (Koszul sign rule).
E = GraphProductAlgebra(path(2), exterior(1))
print("x2 * x1 =", E.monomial((2, "x"), (1, "x")), "   x1 * x1 =", E.monomial((1, "x"), (1, "x")))

# Mixed degrees: generators of degrees 1, 2, 1, 2 around the square.
mixed = [free(1), free(2), free(1), free(2)]
print("degrees (1,2,1,2):", GraphProductAlgebra(K, mixed).basis_counts(8))
print("1/(1-2t-2t^2+4t^3):", RationalFunction((1,), (1, -2, -2, 4)).expand(8).as_ints())
