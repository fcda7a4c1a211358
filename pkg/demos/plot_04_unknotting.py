"""
Crossing changes to the unknot
==============================

Trace the knot from the first long horizontal and change every crossing met
on the under strand first.  The count agrees with the pair-sign bookkeeping
on the central square.
"""
from lorenzknots import build_grid, epsilon_delta, orbit_combinatorics, parse_word, unknotting_set
from lorenzknots.unknotting import wrong_counts_by_start

g = build_grid(orbit_combinatorics(parse_word("xxxyyyxyy")))
rep = unknotting_set(g)
print("U =", rep.U, " N_A =", rep.N_A, " N_B =", rep.N_B)
for c in rep.changes:
    print("  change at row", c.crossing.row + 1, "col", c.crossing.col + 1, "region", c.crossing.region)

eps, delta, *_ = epsilon_delta(g)
print("eps:", eps, " delta:", delta)

# starting elsewhere gives a valid but longer list
print("wrong crossings by start:", wrong_counts_by_start(g))
