"""Tor tables: closed formulas against homology of explicit bar complexes."""

from graphprod.barcomplex import check_acyclic_full, tor_dims_bar, tor_dims_polyhedral
from graphprod.complex import cycle, square
from graphprod.exactmath import GF, QQ, series_invert
from graphprod.galg import GraphProductAlgebra, exterior, trunc_poly
from graphprod.torform import alternating_tor_series, tor_AK_closed, tor_Aprime_closed


def show(title, T):
    print(f"{title} ({T.provenance}):")
    for s, row in T.as_rows().items():
        print(f"  s={s}: {row}")


F = GF(3)

# One algebra: k[x]/x^3 has a periodic resolution.
show("Tor of k[x]/x^3", tor_dims_bar(trunc_poly(1, 3), 4, 8, F))

# Over the square, the kernel A' of A^K -> tensor of the A_i sees the hole of
# the square once, in homological degree 2.
K, A = square(), exterior(1)
show("Tor^{A'} closed", tor_Aprime_closed(K, A, 3, 6, F))
show("Tor^{A'} bar complex", tor_dims_polyhedral(K, A, 3, 6, F, "aprime"))

# Tor over A^K itself is the polyhedral product of the vertex Tor tables.
C = cycle(5)
closed = tor_AK_closed(C, trunc_poly(1, 3), 3, 6, F)
oracle = tor_dims_polyhedral(C, trunc_poly(1, 3), 3, 6, F, "ak")
print("5-cycle, k[x]/x^3: closed form equals bar complex:", closed.same_values(oracle))

# The twisted tensor product over A^K is a resolution of the ground field.
r = check_acyclic_full(K, A, 5, 5, QQ)
print("full resolution homology:", r.homology, " acyclic:", r.ok)

# Euler characteristic of Tor recovers 1/P(A^K).
T = tor_dims_polyhedral(K, A, 6, 6, F, "ak")
lhs = series_invert(GraphProductAlgebra(K, A).hilbert_series(6))
print("1/P  =", lhs.as_ints())
print("sum (-1)^s P(Tor_s) =", alternating_tor_series(T, 6).as_ints())
