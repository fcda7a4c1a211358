"""Grid diagrams of Lorenz knots.

Layout
------
Rows are numbered top to bottom and columns left to right, both 0-based
internally (1-based in JSON).  Every column carries one vertical segment
oriented X -> O, every row one horizontal segment oriented O -> X, and
verticals pass over horizontals.

Part A (upper left) is a family of ``a`` nested clockwise loops, one per
x-point.  Loop ``i`` has a left column ``L_i`` running up from ``X1_i`` to
``O1_i``, a top row ``T_i``, and a right column ``R_i`` running down from
``X2_i``.  The bottom of the loop is the *landing row* of the point
``f(p_i)``.  Loop ``a`` is outermost.  Landing rows are stacked by rank
(rank 1 on top), so the ``t`` long horizontals sit among them at ranks
``mu_1 < ... < mu_t``.  The right columns of the ``t`` outermost loops are
the long verticals.

Part B (lower right) is the same construction for the y-points, reflected
in the anti-diagonal with the roles of X and O exchanged.  Landing rows
become landing columns there, so the long verticals sit among B's landing
columns at ranks ``nu_k``.  Counted from the left, the columns are
``[A-short | B landing columns incl. long verticals | B top columns]``.  The
rows are ``[A tops | A landing rows incl. long horizontals | B rows]``.

With centres of cells at half-integers and lattice points at integers no
ray used for winding numbers meets a segment end.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    ConstructionFailure,
    MultipleComponents,
    NonIntegerGrading,
    NotLorenz,
    ShortShortCrossing,
    UnknownFormat,
)
from . import invariants as inv
from .words import LorenzWord, OrbitCombinatorics, parse_word

A_SHORT = "A_short"
B_SHORT = "B_short"
_LONG_RE = re.compile(r"C_long_(vertical|horizontal)\((\d+)\)$")


def long_vertical(k: int) -> str:
    return f"C_long_vertical({k})"


def long_horizontal(k: int) -> str:
    return f"C_long_horizontal({k})"


def long_index(role: str) -> int | None:
    m = _LONG_RE.match(role)
    return int(m.group(2)) if m else None


@dataclass(frozen=True)
class GridDiagram:
    n: int
    X_col: tuple[int, ...]
    O_col: tuple[int, ...]
    column_roles: tuple[str, ...] | None = None
    row_roles: tuple[str, ...] | None = None

    def __post_init__(self):
        n = self.n
        for name in ("X_col", "O_col"):
            cols = getattr(self, name)
            if len(cols) != n or sorted(cols) != list(range(n)):
                raise ConstructionFailure(f"P1: {name} is not a permutation of 0..{n - 1}")
        if any(x == o for x, o in zip(self.X_col, self.O_col)):
            raise ConstructionFailure("P1: X and O share a cell")
        for roles in (self.column_roles, self.row_roles):
            if roles is not None and len(roles) != n:
                raise ConstructionFailure("P1: role list has wrong length")

    # -- derived lookups -------------------------------------------------
    @property
    def X_row(self) -> tuple[int, ...]:
        out = [0] * self.n
        for r, c in enumerate(self.X_col):
            out[c] = r
        return tuple(out)

    @property
    def O_row(self) -> tuple[int, ...]:
        out = [0] * self.n
        for r, c in enumerate(self.O_col):
            out[c] = r
        return tuple(out)

    @property
    def t(self) -> int:
        if self.column_roles is None:
            return 0
        return sum(long_index(r) is not None for r in self.column_roles)

    def long_vertical_order(self) -> list[int]:
        """Column ids of long verticals ``k = 1..t``."""
        return _long_order(self.column_roles)

    def long_horizontal_order(self) -> list[int]:
        return _long_order(self.row_roles)

    def is_long_row(self, r: int) -> bool:
        return self.row_roles is not None and long_index(self.row_roles[r]) is not None

    def is_long_col(self, c: int) -> bool:
        return self.column_roles is not None and long_index(self.column_roles[c]) is not None

    # -- planar coordinates (doubled, so everything is an integer) -------
    def X_points(self) -> list[tuple[int, int]]:
        return [(2 * c + 1, 2 * (self.n - r) - 1) for r, c in enumerate(self.X_col)]

    def O_points(self) -> list[tuple[int, int]]:
        return [(2 * c + 1, 2 * (self.n - r) - 1) for r, c in enumerate(self.O_col)]


def _long_order(roles) -> list[int]:
    if roles is None:
        return []
    found = {long_index(r): i for i, r in enumerate(roles) if long_index(r) is not None}
    return [found[k] for k in sorted(found)]


@dataclass(frozen=True)
class Crossing:
    row: int
    col: int
    region: str

    @property
    def over(self) -> int:
        return self.col

    @property
    def under(self) -> int:
        return self.row


@dataclass(frozen=True)
class GridState:
    """Lattice points ``(i, j)``: ``i`` counts columns from the left edge,
    ``j`` counts rows from the bottom edge."""

    points: tuple[tuple[int, int], ...]


# ---------------------------------------------------------------------------
# construction


def layout_grid(oc: OrbitCombinatorics) -> GridDiagram:
    """Place the markers without checking any postcondition."""
    a, b, t = oc.a, oc.b, oc.t
    ps = oc.p_successor()
    qs = oc.q_successor()
    n = 2 * a + 2 * b - t
    off = 2 * a - t

    # long strands: p-ranks a-t+1..a exit right, q-ranks b-t+1..b exit left
    mu_k = {m: k for k, m in enumerate(oc.mu, 1)}
    nu_k = {v: k for k, v in enumerate(oc.nu, 1)}

    def T(i):
        return a - i

    def Lam(r):
        return a + r - 1

    def Lcol(i):
        return a - i

    def Lam_col(s):  # B landing column of q-rank s
        return off + (b - s)

    def Tq_col(j):
        return off + b + j - 1

    def Lq_row(j):
        return 2 * a + (b - t) + j - 1

    def Rcol(i):
        kind, r = ps[i]
        return Lam_col(r) if kind == "q" else a + i - 1

    def Rq_row(j):
        kind, r = qs[j]
        return Lam(r) if kind == "p" else 2 * a + (b - t - j)

    X = [None] * n
    O = [None] * n

    def put(grid, r, c):
        if grid[r] is not None:
            raise ConstructionFailure(f"P1: row {r} receives two markers of one kind")
        grid[r] = c

    for i in range(1, a + 1):
        put(X, Lam(i), Lcol(i))
        put(O, T(i), Lcol(i))
        put(X, T(i), Rcol(i))
        kind, r = ps[i]
        if kind == "p":
            put(O, Lam(r), Rcol(i))
    for j in range(1, b + 1):
        put(O, Lq_row(j), Lam_col(j))
        put(X, Lq_row(j), Tq_col(j))
        put(O, Rq_row(j), Tq_col(j))
        kind, r = qs[j]
        if kind == "q":
            put(X, Rq_row(j), Lam_col(r))

    col_roles = [A_SHORT] * off + [B_SHORT] * (2 * b)
    for s, k in nu_k.items():
        col_roles[Lam_col(s)] = long_vertical(k)
    row_roles = [A_SHORT] * (2 * a) + [B_SHORT] * (2 * b - t)
    for m, k in mu_k.items():
        row_roles[Lam(m)] = long_horizontal(k)
    if None in X or None in O:
        raise ConstructionFailure("P1: some row lacks a marker")
    return GridDiagram(n, tuple(X), tuple(O), tuple(col_roles), tuple(row_roles))


def build_grid(oc: OrbitCombinatorics, check: bool = True) -> GridDiagram:
    """Grid diagram of the Lorenz knot; with ``check`` all postconditions are verified."""
    g = layout_grid(oc)
    if check:
        for name, ok, detail in grid_postconditions(g, oc):
            if not ok:
                raise ConstructionFailure(f"{name} failed for {oc.word}: {detail}")
    return g


# ---------------------------------------------------------------------------
# tracing


def trace_segments(g: GridDiagram, start_row: int) -> list[tuple[str, int]]:
    """Segments met when leaving the X of ``start_row`` along its column.

    Returns ``[('v', col), ('h', row), ...]`` for one full component.
    """
    O_row = g.O_row
    out = []
    r = start_row
    while True:
        c = g.X_col[r]
        out.append(("v", c))
        r = O_row[c]
        out.append(("h", r))
        if r == start_row:
            return out


def components(g: GridDiagram) -> int:
    seen = set()
    count = 0
    for r in range(g.n):
        if r in seen:
            continue
        count += 1
        seen.update(i for kind, i in trace_segments(g, r) if kind == "h")
    return count


def trace_word(g: GridDiagram) -> LorenzWord:
    """Read the Lorenz word back off a diagram produced by :func:`build_grid`.

    Between a long horizontal and the next long vertical the trace meets
    ``2*alpha - 1`` short A columns; between that long vertical and the
    next long horizontal it meets ``2*beta - 1`` short B columns.
    """
    if components(g) != 1:
        raise MultipleComponents(f"diagram has {components(g)} components")
    lh = g.long_horizontal_order()
    if not lh or len(g.long_vertical_order()) != len(lh):
        raise NotLorenz("diagram has no long-strand structure")
    segs = trace_segments(g, lh[0])
    letters = []
    count = {"A": 0, "B": 0}
    expect = "v"
    for kind, i in segs:
        if kind == "v":
            role = g.column_roles[i]
            if long_index(role) is not None:
                if expect != "v":
                    raise NotLorenz("two long verticals without a long horizontal between them")
                letters.append("x" * _half_count(count["A"]))
                count = {"A": 0, "B": 0}
                expect = "h"
            elif role == A_SHORT:
                count["A"] += 1
            else:
                count["B"] += 1
        elif g.is_long_row(i):
            if expect != "h":
                raise NotLorenz("two long horizontals without a long vertical between them")
            letters.append("y" * _half_count(count["B"]))
            count = {"A": 0, "B": 0}
            expect = "v"
    return parse_word("".join(letters))


def _half_count(k: int) -> int:
    if k % 2 == 0:
        raise NotLorenz(f"odd short-column count expected, got {k}")
    return (k + 1) // 2


# ---------------------------------------------------------------------------
# crossings, winding numbers, gradings


def _between(v, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return lo < v < hi


def enumerate_crossings(g: GridDiagram, strict: bool = True) -> list[Crossing]:
    """All vertical-over-horizontal crossings, ordered by row then column."""
    X_row, O_row = g.X_row, g.O_row
    out = []
    for r in range(g.n):
        c0, c1 = g.O_col[r], g.X_col[r]
        for c in range(min(c0, c1) + 1, max(c0, c1)):
            if not _between(r, X_row[c], O_row[c]):
                continue
            lr, lc = g.is_long_row(r), g.is_long_col(c)
            if lr and lc:
                region = "C"
            elif lr:
                region = "A"
            elif lc:
                region = "B"
            elif strict and g.column_roles is not None:
                raise ShortShortCrossing(f"short segments cross at row {r}, column {c}")
            else:
                region = "?"
            out.append(Crossing(r, c, region))
    return out


def winding_number(g: GridDiagram, p: tuple[int, int]) -> int:
    """Winding number of the knot around the lattice point ``p = (i, j)``.

    Downward verticals to the left of ``p`` count +1, upward ones -1.
    """
    px, py = p
    X_row, O_row = g.X_row, g.O_row
    w = 0
    for c in range(min(px, g.n)):
        yx = g.n - X_row[c] - 0.5
        yo = g.n - O_row[c] - 0.5
        if _between(py, yx, yo):
            w += 1 if yx > yo else -1
    return w


def x_minus(g: GridDiagram) -> GridState:
    """Lower-left corners of the X-marked cells, listed by row."""
    return GridState(tuple((c, g.n - r - 1) for r, c in enumerate(g.X_col)))


def _I(P, Q) -> int:
    return sum(1 for p in P for q in Q if p[0] < q[0] and p[1] < q[1])


def j_pairing(P: Iterable[Sequence], Q: Iterable[Sequence]) -> Fraction:
    """Symmetrized count of southwest-northeast pairs between two point sets."""
    P, Q = list(P), list(Q)
    return Fraction(_I(P, Q) + _I(Q, P), 2)


def alexander_parts(g: GridDiagram) -> dict:
    ws = [winding_number(g, p) for p in x_minus(g).points]
    return {
        "minus_winding": -sum(ws),
        "windings": ws,
        "J_OO": j_pairing(g.O_points(), g.O_points()),
        "J_XX": j_pairing(g.X_points(), g.X_points()),
    }


def alexander_direct(g: GridDiagram) -> int:
    """Alexander grading of the state at the lower-left corners of the X's."""
    parts = alexander_parts(g)
    A = parts["minus_winding"] + (parts["J_OO"] - parts["J_XX"]) / 2 - Fraction(g.n - 1, 2)
    if A.denominator != 1:
        raise NonIntegerGrading(f"A = {A}")
    return int(A)


# ---------------------------------------------------------------------------
# postconditions


def grid_postconditions(g: GridDiagram, oc: OrbitCombinatorics) -> list[tuple[str, bool, str]]:
    """Evaluate P1-P6 in order; each entry is ``(name, ok, detail)``.

    Checks after the first failure are still attempted when they can run.
    """
    from .unknotting import unknotting_set  # circular at import time

    a, b, t, mu, nu = oc.a, oc.b, oc.t, oc.mu, oc.nu
    res = []

    # P1
    lv, lh = g.long_vertical_order(), g.long_horizontal_order()
    upper = [r for r in range(g.n) if g.row_roles[r] != B_SHORT]
    X_in_A = len(upper)
    O_in_BC = sum(1 for c in g.O_col if g.column_roles[c] != A_SHORT)
    ok = g.n == 2 * a + 2 * b - t and len(lv) == t and len(lh) == t and X_in_A == 2 * a and O_in_BC == 2 * b
    res.append(("P1", ok, f"n={g.n}, long={len(lv)}/{len(lh)}, X in A={X_in_A}, O in B+C={O_in_BC}"))

    # P2
    try:
        w = trace_word(g)
        ok, detail = w == oc.word, f"traced {w}"
    except Exception as exc:  # any failure here is a P2 failure
        ok, detail = False, repr(exc)
    res.append(("P2", ok, detail))

    # P3
    try:
        cr = enumerate_crossings(g)
        regions = {k: sum(1 for x in cr if x.region == k) for k in "ABC"}
        want = {"A": inv.crossings_A(a, t, mu), "B": inv.crossings_B(b, t, nu), "C": t * t}
        per_v = [sum(1 for x in cr if x.col == c and x.region == "B") for c in lv]
        per_h = [sum(1 for x in cr if x.row == r and x.region == "A") for r in lh]
        ok = (regions == want
              and per_v == inv.strand_crossings_vertical(b, t, nu)
              and per_h == inv.strand_crossings_horizontal(a, t, mu))
        detail = f"regions={regions} want={want} per_v={per_v} per_h={per_h}"
    except ShortShortCrossing as exc:
        ok, detail = False, str(exc)
    res.append(("P3", ok, detail))

    # P4
    try:
        A = alexander_direct(g)
        u = inv.unknotting_closed(a, b, t, mu, nu)
        res.append(("P4", A == u, f"direct={A} closed={u}"))
    except NonIntegerGrading as exc:
        res.append(("P4", False, str(exc)))

    # P5
    try:
        rep = unknotting_set(g)
        u = inv.unknotting_closed(a, b, t, mu, nu)
        ok = rep.U == u and rep.N_B - rep.N_A == -(t - 1) and len(rep.changes) == u
        res.append(("P5", ok, f"U={rep.U} u={u} N_B-N_A={rep.N_B - rep.N_A}"))
    except Exception as exc:
        res.append(("P5", False, repr(exc)))

    # P6
    parts = alexander_parts(g)
    ws = parts["windings"]
    upper = set(r for r in range(g.n) if g.row_roles[r] != B_SHORT)
    sum_A = -sum(w for r, w in enumerate(ws) if r in upper)
    sum_B = -sum(w for r, w in enumerate(ws) if r not in upper)
    ok = (parts["J_OO"] == inv.j_oo_closed(a, b, t, mu)
          and parts["J_XX"] == inv.j_xx_closed(a, b, t, nu)
          and sum_A == a * a
          and sum_B == -b * b + b + b * t - sum(nu)
          and parts["minus_winding"] == inv.winding_sum_closed(a, b, t, nu))
    res.append(("P6", ok, f"J_OO={parts['J_OO']} J_XX={parts['J_XX']} sum_A={sum_A} sum_B={sum_B}"))
    return res


# ---------------------------------------------------------------------------
# export


def to_dict(g: GridDiagram) -> dict:
    return {
        "n": g.n,
        "X": [c + 1 for c in g.X_col],
        "O": [c + 1 for c in g.O_col],
        "column_roles": list(g.column_roles or []),
        "row_roles": list(g.row_roles or []),
        "long_vertical_order": [c + 1 for c in g.long_vertical_order()],
        "long_horizontal_order": [r + 1 for r in g.long_horizontal_order()],
    }


def from_dict(d: dict) -> GridDiagram:
    return GridDiagram(
        n=d["n"],
        X_col=tuple(c - 1 for c in d["X"]),
        O_col=tuple(c - 1 for c in d["O"]),
        column_roles=tuple(d["column_roles"]) or None,
        row_roles=tuple(d["row_roles"]) or None,
    )


def from_json(text: str) -> GridDiagram:
    return from_dict(json.loads(text))


def to_ascii(g: GridDiagram) -> str:
    lines = []
    for r in range(g.n):
        row = ["·"] * g.n
        row[g.X_col[r]] = "X"
        row[g.O_col[r]] = "O"
        lines.append("".join(row))
    return "\n".join(lines) + "\n"


CELL = 24


def to_svg(g: GridDiagram) -> str:
    n, s = g.n, CELL
    size = n * s
    half = s / 2

    def ctr(r, c):
        return c * s + half, r * s + half

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
        '<g stroke="#ddd" stroke-width="1">',
    ]
    for i in range(n + 1):
        out.append(f'<line x1="{i * s}" y1="0" x2="{i * s}" y2="{size}"/>')
        out.append(f'<line x1="0" y1="{i * s}" x2="{size}" y2="{i * s}"/>')
    out.append("</g>")
    out.append('<g class="horizontal" stroke="black" stroke-width="2">')
    for r in range(n):
        (x0, y0), (x1, _) = ctr(r, g.O_col[r]), ctr(r, g.X_col[r])
        out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}"/>')
    out.append("</g>")
    for cr in enumerate_crossings(g, strict=False):
        x, y = ctr(cr.row, cr.col)
        out.append(f'<rect class="gap" x="{x - 5}" y="{y - 3}" width="10" height="6" fill="white"/>')
    out.append('<g class="vertical" stroke="black" stroke-width="2">')
    X_row, O_row = g.X_row, g.O_row
    for c in range(n):
        (x0, y0), (_, y1) = ctr(X_row[c], c), ctr(O_row[c], c)
        out.append(f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}"/>')
    out.append("</g>")
    out.append('<g font-family="monospace" font-size="14" text-anchor="middle" dominant-baseline="central">')
    for r in range(n):
        for c, glyph in ((g.X_col[r], "X"), (g.O_col[r], "O")):
            x, y = ctr(r, c)
            out.append(f'<text x="{x}" y="{y}">{glyph}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def export(g: GridDiagram, format: str = "ascii") -> str:
    if format == "ascii":
        return to_ascii(g)
    if format == "json":
        return json.dumps(to_dict(g), indent=2) + "\n"
    if format == "svg":
        return to_svg(g)
    raise UnknownFormat(f"unknown format {format!r}; choose ascii, svg or json")
