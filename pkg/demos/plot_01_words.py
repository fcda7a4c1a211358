"""
Lorenz words and branch-line ranks
==================================

A Lorenz knot is a cyclic word in x and y.  Its points on the branch line
sort by their itineraries, and the strands that change sides land at the
ranks mu (right to left) and nu (left to right).
"""
from lorenzknots import orbit_combinatorics, parse_word, syllables

# any rotation names the same knot; the least one is canonical
w = parse_word("yyxxxyyyxy")
print("canonical:", w)
print("syllables:", syllables(w))

oc = orbit_combinatorics(w)
print("a, b, t:", oc.a, oc.b, oc.t)
print("mu:", oc.mu, " nu:", oc.nu)

# the first-return map is one cycle through all a + b points
print("pi:", oc.pi[1:])
