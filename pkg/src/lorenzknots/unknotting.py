"""Crossing changes that turn a Lorenz grid diagram into a descending diagram.

The diagram is traced once from the X at the left end of long horizontal 1
(the strand landing at ``p_1``).  A crossing is *right* when its over-strand
(the vertical) is reached first, and *wrong* otherwise.  Changing every wrong
crossing yields a descending diagram, which is always an unknot.

Cutting the knot at the left ends of the long horizontals splits it into
``t`` strings, one per syllable ``x^alpha_i y^beta_i``.  Cutting at the right
ends shifts only the labels of the long horizontals.  The pairwise sign
matrices ``eps`` and ``delta`` compare the strings at two corners of the
central square.  They turn the regional crossing counts into counts of wrong
crossings.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import ProcedureMismatch
from .grid import A_SHORT, B_SHORT, Crossing, GridDiagram, enumerate_crossings, trace_segments


class CutMode(Enum):
    AtXLeftEnds = "B"
    AtORightEnds = "A"


@dataclass(frozen=True)
class StringLabeling:
    cut_mode: CutMode
    t: int
    columns: tuple[int, ...]
    rows: tuple[int, ...]

    def vertical(self, c: int) -> int:
        return self.columns[c]

    def horizontal(self, r: int) -> int:
        return self.rows[r]


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def string_labels(g: GridDiagram, mode: CutMode = CutMode.AtXLeftEnds) -> StringLabeling:
    lh = g.long_horizontal_order()
    t = len(lh)
    cols = [0] * g.n
    rows = [0] * g.n
    i = 1
    for kind, idx in trace_segments(g, lh[0]):
        if kind == "v":
            cols[idx] = i
        else:
            rows[idx] = i
            if g.is_long_row(idx):
                i += 1
    if i != t + 1:
        raise ProcedureMismatch(f"expected {t} strings, traced {i - 1}")
    if mode is CutMode.AtORightEnds:
        for r in lh:
            rows[r] = rows[r] % t + 1
    return StringLabeling(mode, t, tuple(cols), tuple(rows))


@dataclass(frozen=True)
class LabeledCrossing:
    crossing: Crossing
    strings: tuple[int, int]  # (vertical, horizontal), cut at X left ends
    strings_A: tuple[int, int]  # same, cut at O right ends
    wrong: bool

    def to_dict(self) -> dict:
        return {
            "row": self.crossing.row + 1,
            "col": self.crossing.col + 1,
            "region": self.crossing.region,
            "strings": list(self.strings),
            "wrong": self.wrong,
        }


@dataclass(frozen=True)
class WrongCrossingReport:
    t: int
    N_A: int
    N_B: int
    c_AC: int
    c_BC: int
    self_A: int
    self_B: int
    u_AC: int
    u_BC: int
    U: int
    wrong_AC: int
    wrong_BC: int
    wrong_C: int
    crossings: tuple[LabeledCrossing, ...] = field(repr=False)

    @property
    def changes(self) -> list[LabeledCrossing]:
        return [c for c in self.crossings if c.wrong]

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "N_A": self.N_A,
            "N_B": self.N_B,
            "c_AC": self.c_AC,
            "c_BC": self.c_BC,
            "self_A": self.self_A,
            "self_B": self.self_B,
            "u_AC": self.u_AC,
            "u_BC": self.u_BC,
            "U": self.U,
            "changes": [
                dict(c.to_dict(), over="row", under="col") for c in self.changes
            ],
            "crossings": [c.to_dict() for c in self.crossings],
        }


def classify_by_trace(g: GridDiagram, start_row: int | None = None) -> list[LabeledCrossing]:
    """Label every crossing right/wrong by the order in which the trace meets it."""
    if start_row is None:
        start_row = g.long_horizontal_order()[0]
    order = {seg: i for i, seg in enumerate(trace_segments(g, start_row))}
    lb = string_labels(g, CutMode.AtXLeftEnds)
    la = string_labels(g, CutMode.AtORightEnds)
    out = []
    for cr in enumerate_crossings(g):
        wrong = order[("h", cr.row)] < order[("v", cr.col)]
        out.append(LabeledCrossing(
            cr,
            (lb.vertical(cr.col), lb.horizontal(cr.row)),
            (la.vertical(cr.col), la.horizontal(cr.row)),
            wrong,
        ))
    return out


def square_signs(vertical_col: dict[int, int], horizontal_row: dict[int, int]):
    """Pair signs on the central square from strand positions alone.

    ``vertical_col[i]`` / ``horizontal_row[i]`` give the column / row of the
    long vertical / long horizontal of string ``i`` when the knot is cut at the
    X left ends.  Cutting at the O right ends instead moves the horizontal of
    string ``i`` to string ``i % t + 1``.  Returns ``(eps, delta, N_A, N_B)``.
    """
    t = len(vertical_col)
    row_A = {i % t + 1: r for i, r in horizontal_row.items()}
    eps, delta = {}, {}
    for i in range(1, t + 1):
        for j in range(i + 1, t + 1):
            # upper left corner: leftmost column, topmost row
            v = min((i, j), key=vertical_col.__getitem__)
            h = min((i, j), key=horizontal_row.__getitem__)
            eps[i, j] = _sign(v - h)
            # lower right corner, recut numbering
            v = max((i, j), key=vertical_col.__getitem__)
            h = max((i, j), key=row_A.__getitem__)
            delta[i, j] = _sign(h - v)
    return eps, delta, sum(delta.values()), sum(eps.values())


def long_strand_positions(g: GridDiagram) -> tuple[dict[int, int], dict[int, int]]:
    lb = string_labels(g, CutMode.AtXLeftEnds)
    vert = {lb.vertical(c): c for c in g.long_vertical_order()}
    hor = {lb.horizontal(r): r for r in g.long_horizontal_order()}
    return vert, hor


def epsilon_delta(g: GridDiagram):
    """Return ``(eps, delta, N_A, N_B)``; matrices are dicts keyed by ``(i, j)``, ``i < j``."""
    return square_signs(*long_strand_positions(g))


def wrong_counts_by_start(g: GridDiagram) -> dict[int, int]:
    """Number of wrong crossings when tracing from the X of each long horizontal ``k``."""
    return {
        k: sum(c.wrong for c in classify_by_trace(g, r))
        for k, r in enumerate(g.long_horizontal_order(), 1)
    }


def unknotting_set(g: GridDiagram, strict: bool = True) -> WrongCrossingReport:
    """Run the crossing-change procedure and its pair-sign bookkeeping.

    With ``strict`` a disagreement between the trace count and the
    bookkeeping formulas raises :class:`ProcedureMismatch`.
    """
    from . import invariants as inv

    t = len(g.long_horizontal_order())
    labeled = classify_by_trace(g)
    _, _, N_A, N_B = epsilon_delta(g)
    in_BC = [c for c in labeled if c.crossing.region in "BC"]
    in_AC = [c for c in labeled if c.crossing.region in "AC"]
    c_BC, c_AC = len(in_BC), len(in_AC)
    self_B = sum(1 for c in in_BC if c.strings[0] == c.strings[1])
    self_A = sum(1 for c in in_AC if c.strings_A[0] == c.strings_A[1])
    # letter counts read off the roles: 2a rows above part B, 2b columns right of part A
    a = sum(1 for r in g.row_roles if r != B_SHORT) // 2
    b = sum(1 for c in g.column_roles if c != A_SHORT) // 2
    twice_BC = c_BC - b + N_B
    twice_AC = c_AC - a - N_A
    if twice_BC % 2 or twice_AC % 2:
        raise inv.IntegralityViolation("odd wrong-crossing count from pair signs")
    u_BC, u_AC = twice_BC // 2, twice_AC // 2
    U = u_AC + u_BC - t * (t - 1) // 2
    rep = WrongCrossingReport(
        t=t, N_A=N_A, N_B=N_B, c_AC=c_AC, c_BC=c_BC,
        self_A=self_A, self_B=self_B, u_AC=u_AC, u_BC=u_BC, U=U,
        wrong_AC=sum(c.wrong for c in in_AC),
        wrong_BC=sum(c.wrong for c in in_BC),
        wrong_C=sum(c.wrong for c in labeled if c.crossing.region == "C"),
        crossings=tuple(labeled),
    )
    if strict and (self_A != a or self_B != b):
        raise ProcedureMismatch(f"self crossings {self_A}/{self_B}, expected a={a}, b={b}")
    if strict and (len(rep.changes) != U or rep.wrong_AC != u_AC or rep.wrong_BC != u_BC
                   or rep.wrong_C != t * (t - 1) // 2):
        raise ProcedureMismatch(
            f"trace counts {len(rep.changes)} wrong ({rep.wrong_AC} in A+C, {rep.wrong_BC} in B+C), "
            f"pair signs give U={U} ({u_AC}, {u_BC})"
        )
    return rep
