"""
Grid diagram and the Alexander grading
======================================

The grid has one long vertical and one long horizontal per trip, and every
crossing sits on a long strand.  The grading of the lower-left state is
computed straight from winding numbers and the J pairing.
"""
from pathlib import Path

from lorenzknots import alexander_direct, build_grid, enumerate_crossings, export, orbit_combinatorics, parse_word
from lorenzknots.grid import alexander_parts

g = build_grid(orbit_combinatorics(parse_word("xxxyyyxyy")))
print(export(g, "ascii"))

regions = [c.region for c in enumerate_crossings(g)]
print("crossings by region:", {r: regions.count(r) for r in "ABC"})

parts = alexander_parts(g)
print("J(O,O) =", parts["J_OO"], " J(X,X) =", parts["J_XX"])
print("A(x-) =", alexander_direct(g))

# an SVG with a white gap under every crossing
out = Path("grid_xxxyyyxyy.svg")
out.write_text(export(g, "svg"))
print("wrote", out)
