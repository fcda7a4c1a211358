"""The Lorenz braid: an independent route to the crossing count and genus.

Strands start at the branch positions ``1..a+b`` and end at their images
under the first-return map.  Strands from the left half never cross each
other, nor do strands from the right half; every crossing puts a
left-origin strand in front of a right-origin one.  The result is a positive
permutation braid.  Its closure's Alexander polynomial comes from the
reduced Burau representation.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InexactDivision, MultiComponent
from .laurent import LaurentPoly, det_bareiss, padd, pdivexact, pmul
from .words import OrbitCombinatorics

LEFT, RIGHT = "L", "R"


@dataclass(frozen=True)
class BraidData:
    strands: int
    pi: tuple[int, ...]  # 1-based, pi[0] unused
    origin: tuple[str, ...]  # origin[i] for branch position i (1-based), origin[0] unused
    word: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.word)

    def word_str(self) -> str:
        return " ".join(map(str, self.word))


def lorenz_braid(oc: OrbitCombinatorics) -> BraidData:
    """Sweep the strands into place one adjacent transposition at a time.

    Each step swaps the leftmost adjacent pair that is out of order, so the
    word is deterministic and contains exactly one letter per inversion.
    """
    L = oc.L
    pi = oc.pi
    origin = ("",) + tuple(LEFT if i <= oc.a else RIGHT for i in range(1, L + 1))
    cur = list(range(1, L + 1))  # strand (by start position) at each slot
    word = []
    i = 0
    while i < L - 1:
        if pi[cur[i]] > pi[cur[i + 1]]:
            if (origin[cur[i]], origin[cur[i + 1]]) != (LEFT, RIGHT):
                raise AssertionError("same-side strands out of order")
            cur[i], cur[i + 1] = cur[i + 1], cur[i]
            word.append(i + 1)
            i = max(i - 1, 0)
        else:
            i += 1
    return BraidData(L, tuple(pi), origin, tuple(word))


def inversion_count(braid: BraidData) -> int:
    pi = braid.pi
    n = braid.strands
    return sum(1 for i in range(1, n + 1) for j in range(i + 1, n + 1) if pi[i] > pi[j])


def cycle_count(pi) -> int:
    n = len(pi) - 1
    seen = [False] * (n + 1)
    count = 0
    for i in range(1, n + 1):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = pi[j]
    return count


def reduced_burau(word, strands: int) -> list[list[list[int]]]:
    """Matrix of the reduced Burau representation, entries as coefficient lists in ``s``.

    ``sigma_i`` acts as the identity except on row ``i-1`` (0-based), which
    reads ``(s, -s, 1)`` across columns ``i-2, i-1, i``, truncated at the edges.
    """
    d = strands - 1
    M = [[[1] if r == c else [] for c in range(d)] for r in range(d)]
    for g in word:
        m = g - 1
        for row in M:
            col = row[m]
            if not col:
                continue
            if m - 1 >= 0:
                row[m - 1] = padd(row[m - 1], pmul([0, 1], col))
            if m + 1 < d:
                row[m + 1] = padd(row[m + 1], col)
            row[m] = pmul([0, -1], col)
    return M


def alexander_polynomial(braid: BraidData) -> LaurentPoly:
    """Normalized Alexander polynomial of the braid closure."""
    if cycle_count(braid.pi) != 1:
        raise MultiComponent("braid closure has more than one component")
    n = braid.strands
    if n == 1:
        return LaurentPoly((1,))
    B = reduced_burau(braid.word, n)
    d = n - 1
    I_minus_B = [
        [padd([1] if r == c else [], [-x for x in B[r][c]]) for c in range(d)]
        for r in range(d)
    ]
    det = det_bareiss(I_minus_B)
    delta = pdivexact(det, [1] * n)
    if not delta:
        raise InexactDivision("zero Alexander polynomial for a knot")
    return LaurentPoly(tuple(delta)).normalized()
