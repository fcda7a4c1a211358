import json
import random
from fractions import Fraction

import pytest

from lorenzknots import build_grid, orbit_combinatorics, parse_word
from lorenzknots.braid import alexander_polynomial, lorenz_braid
from lorenzknots.errors import MultipleComponents, NotLorenz, UnknownFormat
from lorenzknots.grid import (
    GridDiagram,
    alexander_direct,
    alexander_parts,
    components,
    enumerate_crossings,
    export,
    from_json,
    grid_postconditions,
    j_pairing,
    layout_grid,
    trace_word,
    winding_number,
    x_minus,
)
from lorenzknots.harness import iter_words

from oracles import minesweeper_alexander


def grid(s):
    return build_grid(orbit_combinatorics(parse_word(s)))


def regions(g):
    cr = enumerate_crossings(g)
    return {k: sum(1 for c in cr if c.region == k) for k in "ABC"}


def test_xy_grid():
    g = grid("xy")
    assert g.n == 3
    assert len(enumerate_crossings(g)) == 1
    assert regions(g) == {"A": 0, "B": 0, "C": 1}
    assert components(g) == 1


def test_trefoil_grid(trefoil):
    _, g = trefoil
    assert g.n == 8
    assert regions(g) == {"A": 0, "B": 2, "C": 4}


def test_fig3_grid(fig3):
    # 2a + 2b - t = 8 + 10 - 2
    _, g = fig3
    assert g.n == 16
    assert regions(g) == {"A": 3, "B": 5, "C": 4}
    assert g.t == 2


@pytest.mark.parametrize("s", ["xxxyyyxyy", "xy", "xyxyy", "xxyxyxyyy"])
def test_round_trip(s):
    w = parse_word(s)
    assert trace_word(grid(s)) == w


def test_two_by_two_rejected():
    g = GridDiagram(2, X_col=(0, 1), O_col=(1, 0))
    with pytest.raises((NotLorenz, MultipleComponents)):
        trace_word(g)


def test_two_component_grid_rejected():
    g = GridDiagram(
        4, X_col=(0, 1, 2, 3), O_col=(1, 0, 3, 2),
        column_roles=("A_short",) * 4, row_roles=("A_short",) * 4,
    )
    assert components(g) == 2
    with pytest.raises(MultipleComponents):
        trace_word(g)


def test_postconditions_corpus():
    for w in iter_words(12):
        oc = orbit_combinatorics(w)
        res = grid_postconditions(layout_grid(oc), oc)
        assert [r[0] for r in res] == ["P1", "P2", "P3", "P4", "P5", "P6"]
        assert all(ok for _, ok, _ in res), (w, res)


def test_postconditions_random_long_words():
    rng = random.Random(20261017)
    seen = 0
    while seen < 300:
        n = rng.randint(13, 24)
        s = "".join(rng.choice("xy") for _ in range(n))
        try:
            w = parse_word(s)
        except ValueError:
            continue
        build_grid(orbit_combinatorics(w))  # raises on any failed postcondition
        seen += 1


# winding numbers and the J pairing


def test_winding_outside(fig3):
    _, g = fig3
    assert winding_number(g, (-3, 5)) == 0
    assert winding_number(g, (g.n + 2, 5)) == 0


def test_fig3_winding_sums(fig3):
    oc, g = fig3
    parts = alexander_parts(g)
    assert parts["minus_winding"] == 2  # 16 - 25 + 5 + 10 - 4
    upper = [r for r in range(g.n) if g.row_roles[r] != "B_short"]
    assert -sum(parts["windings"][r] for r in upper) == 16  # a^2


def test_fig3_j_values(fig3):
    _, g = fig3
    parts = alexander_parts(g)
    assert parts["J_OO"] == 48
    assert parts["J_XX"] == 33


def test_j_small():
    assert j_pairing([], [(1, 1)]) == 0
    assert j_pairing([(0, 0)], [(1, 1)]) == Fraction(1, 2)


def test_j_symmetric_bilinear():
    rng = random.Random(7)
    pts = lambda k: [(rng.randint(0, 9), rng.randint(0, 9)) for _ in range(k)]
    for _ in range(50):
        P, Q, R = pts(4), pts(3), pts(5)
        assert j_pairing(P, Q) == j_pairing(Q, P)
        assert j_pairing(P + R, Q) == j_pairing(P, Q) + j_pairing(R, Q)


@pytest.mark.parametrize("s, u", [("xxxyyyxyy", 2), ("xyxyy", 1), ("xy", 0)])
def test_alexander_direct(s, u):
    assert alexander_direct(grid(s)) == u


def test_x_minus_lower_left(trefoil):
    _, g = trefoil
    pts = x_minus(g).points
    assert len(pts) == g.n
    assert len({p[0] for p in pts}) == g.n


def test_minesweeper_matches_burau():
    for w in iter_words(9):
        oc = orbit_combinatorics(w)
        g = build_grid(oc)
        assert minesweeper_alexander(g) == alexander_polynomial(lorenz_braid(oc)), w


# export


def test_ascii_xy():
    text = export(grid("xy"), "ascii")
    lines = text.splitlines()
    assert len(lines) == 3 and all(len(line) == 3 for line in lines)
    assert text.count("X") == 3 and text.count("O") == 3


@pytest.mark.parametrize("s", ["xy", "xyxyy", "xxxyyyxyy"])
def test_json_round_trip(s):
    g = grid(s)
    text = export(g, "json")
    assert from_json(text) == g
    d = json.loads(text)
    assert d["n"] == g.n and len(d["X"]) == g.n


def test_svg_fig3(fig3):
    _, g = fig3
    svg = export(g, "svg")
    assert svg.count('class="gap"') == 12
    size = 16 * 24
    assert f'width="{size}"' in svg
    assert svg.count(">X<") == 16 and svg.count(">O<") == 16


def test_unknown_format(fig3):
    with pytest.raises(UnknownFormat):
        export(fig3[1], "png")
