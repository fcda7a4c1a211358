"""
The Lorenz braid
================

An independent route: the positive permutation braid of the first-return
map.  Its crossing count is c, and (k - n + 1)/2 is the genus, which equals
the unknotting number.
"""
from lorenzknots import alexander_polynomial, lorenz_braid, orbit_combinatorics, parse_word, positive_braid_unknotting

for text in ["xyxyy", "xxxyyyxyy", "xyxyxyy"]:
    br = lorenz_braid(orbit_combinatorics(parse_word(text)))
    delta = alexander_polynomial(br)
    print(f"{text}: {br.strands} strands, {br.k} crossings, "
          f"u = {positive_braid_unknotting(br.k, br.strands)}, Delta = {delta}")
