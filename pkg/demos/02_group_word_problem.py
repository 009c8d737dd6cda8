"""Normal forms in graph products of groups.

Right-angled Coxeter groups (Z/2 at each vertex) and right-angled Artin
groups (Z at each vertex) are the two basic families.
"""

import random

from graphprod.complex import path, square
from graphprod.groupprod import GraphProduct, LocalGroup, Z2

P = GraphProduct(path(3), Z2)

# Two spellings of one element that a single adjacent swap cannot relate
# still reduce to the same normal form.
u = [(3, 1), (1, 1), (2, 1)]
v = [(2, 1), (3, 1), (1, 1)]
print("normalize(u) =", P.normalize(u), "  normalize(v) =", P.normalize(v))
print("rewriting oracle says equal:", P.equal_oracle(u, v))

# Letters of one vertex separated only by commuting letters merge.
print("a2 a3 a1 a2 ->", P.normalize([(2, 1), (3, 1), (1, 1), (2, 1)]))

# The abelianization is read off letter by letter, and every element splits as
# (kernel part) * (product of vertex letters).
g = P.normalize([(1, 1), (3, 1), (2, 1), (1, 1), (3, 1)])
s = P.split(g)
print(f"g = {g}:  ab(g) = {P.ab(g)},  kernel part = {s.h},  reconstructs: {P.unsplit(s) == g}")

# The kernel of ab is generated by iterated commutators indexed by
# disconnected full subcomplexes.
print("kernel generators on the path:", P.kernel_generators())
Q = GraphProduct(square(), Z2)
a, b = Q.kernel_generators()
print("square: two generators, commuting:", Q.multiply(a, b) == Q.multiply(b, a))

# Counting elements by length matches counting support words.
census = Q.length_census(6)
print("square sphere sizes:", census["counts"], " predicted:", census["predicted"])

# An Artin group: the free group on two letters times Z.
R = GraphProduct(path(3), LocalGroup.integers())
rng = random.Random(1)
w = R.normalize(R.random_word(8, rng))
print("random RAAG element:", w, " inverse:", R.invert(w), " product:", R.multiply(w, R.invert(w)))
