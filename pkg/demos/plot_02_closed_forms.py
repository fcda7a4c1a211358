"""
Closed-form invariants
======================

Everything below is a polynomial in a, b, t and the sums of mu and nu.
"""
from lorenzknots import closed_form_invariants, orbit_combinatorics, parse_word

for text in ["xy", "xyxyy", "xxxyyyxyy", "xyxyxyy"]:
    rec = closed_form_invariants(orbit_combinatorics(parse_word(text)))
    print(f"{text:12s} u={rec.unknotting}  c={rec.crossings_total} "
          f"(A {rec.crossings_A}, B {rec.crossings_B}, C {rec.crossings_C})  n={rec.grid_number}")
