"""Flag complexes from graphs: simplices, full subcomplexes, reduced homology
and chordality."""

from itertools import combinations

from graphprod.complex import cycle, flag_complete, square, triangle_with_pendant
from graphprod.exactmath import GF, QQ
from graphprod.homology import reduced_homology

# A flag complex is determined by its 1-skeleton: every clique is a simplex.
K = triangle_with_pendant()
print("triangle with a pendant vertex:")
print("  simplices in lexicographic order:", K.lex_order_simplices())

# The square is a circle, so it carries one class in degree 1.
for F in (GF(2), GF(3), QQ):
    print(f"  H~(square; {F.name}) =", reduced_homology(square(), F).dims)

# Full subcomplexes keep every simplex inside the chosen vertex set.  In the
# 5-cycle every proper subset spans a forest, so only the whole cycle has H~_1.
C5 = cycle(5)
for r in (2, 3, 4, 5):
    holes = [I for I in combinations(C5.vertices, r) if reduced_homology(C5.full_subcomplex(I))[1]]
    print(f"  5-cycle, |I|={r}: subsets with H~_1 != 0: {holes}")

# Chordal graphs are exactly those with no such holes anywhere.
G = flag_complete(5, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3), (4, 5)])
print("square with a diagonal plus a tail is chordal:", G.is_chordal())
print("the plain square is chordal:", square().is_chordal())

# Splitting along a vertex star: K = star(v) U (K - v), glued along the link.
star, rest, link = K.split_star(4)
print("star of 4:", star.vertices, " rest:", rest.vertices, " link:", link.vertices)
print("the star is a cone, hence acyclic:", reduced_homology(star).is_acyclic())
