"""Minimal generators of A' and when it is free."""

from graphprod.complex import cycle, path, square
from graphprod.exactmath import GF
from graphprod.galg import exterior, free
from graphprod.torform import (
    generator_counts,
    is_free_Aprime,
    is_free_H_groups,
    min_generators_Aprime,
    tor_Aprime_closed,
)

# On a path, each pair of non-adjacent vertices contributes brackets.
gens = min_generators_Aprime(path(3), free(1), 5)
print("path-3 brackets up to degree 4:", [str(g) for g in gens if g.degree <= 4])
print("counts by degree:", generator_counts(gens, 5))
print("Tor_1 row:       ", tor_Aprime_closed(path(3), free(1), 1, 5, GF(2)).row(1))

for name, K in (("path-4", path(4)), ("square", square()), ("5-cycle", cycle(5))):
    print(f"{name}: chordal={K.is_chordal()}  A' free={is_free_Aprime(K)}  kernel free={is_free_H_groups(K)}")

# The square is not chordal: the hole gives a relation among the generators,
# visible as Tor_2.
print("square Tor_2 row:", tor_Aprime_closed(square(), exterior(1), 2, 6, GF(2)).row(2))
