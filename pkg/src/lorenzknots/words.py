"""Lorenz words and the combinatorics of their orbit on the branch line.

A periodic orbit of the Lorenz flow is named by a primitive cyclic word over
``{x, y}``; ``x`` means a pass around the left ear, ``y`` around the right
one.  Every letter position of the word is one intersection point of the
orbit with the branch interval, and the first-return map acts on those points
as the one-letter shift.  Points are ordered on the branch line by comparing
the rotations of the word lexicographically with ``x < y``.

Numbering conventions used throughout the package:

* x-points are ``p_1 < ... < p_a`` (rank 1 is leftmost);
* y-points are ``q_b < ... < q_1`` (rank 1 is *rightmost*);
* branch positions ``1..a+b`` run left to right, so ``p_i`` sits at ``i``
  and ``q_j`` at ``a + b + 1 - j``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    ConsistencyError,
    EmptyWord,
    InvalidLetter,
    PeriodicWord,
    SingleLetterWord,
)

ALPHABET = ("x", "y")


def least_rotation_index(s: str) -> int:
    """Booth's algorithm: start index of the lexicographically least rotation."""
    d = s + s
    f = [-1] * len(d)
    k = 0
    for j in range(1, len(d)):
        i = f[j - k - 1]
        while i != -1 and d[j] != d[k + i + 1]:
            if d[j] < d[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if i == -1 and d[j] != d[k + i + 1]:
            if d[j] < d[k + i + 1]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def is_primitive(s: str) -> bool:
    return (s + s).find(s, 1) == len(s)


def rotate(s: str, k: int) -> str:
    k %= len(s)
    return s[k:] + s[:k]


def swap_letters(s: str) -> str:
    return s.translate(str.maketrans("xy", "yx"))


@dataclass(frozen=True)
class LorenzWord:
    """Canonical (least-rotation) representative of a primitive necklace."""

    letters: str

    def __post_init__(self):
        if self.letters != rotate(self.letters, least_rotation_index(self.letters)):
            raise ConsistencyError(f"{self.letters!r} is not in canonical form")

    @property
    def canonical(self) -> bool:
        return True

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return self.letters


def parse_word(text: str) -> LorenzWord:
    """Validate ``text`` and return its canonical rotation.

    Input is case-insensitive; surrounding whitespace is ignored.
    """
    s = text.strip().lower()
    if not s:
        raise EmptyWord("empty word")
    bad = sorted(set(s) - set(ALPHABET))
    if bad:
        raise InvalidLetter(f"letters outside {{x,y}}: {''.join(bad)!r}")
    if "x" not in s or "y" not in s:
        raise SingleLetterWord(f"{s!r} uses a single letter; it names an ear boundary, not a knot")
    if not is_primitive(s):
        raise PeriodicWord(f"{s!r} is a proper power")
    return LorenzWord(rotate(s, least_rotation_index(s)))


def syllables(w: LorenzWord) -> list[tuple[int, int]]:
    """Exponents ``(alpha_i, beta_i)`` of ``w = x^a1 y^b1 ... x^at y^bt``."""
    out = []
    s = w.letters
    i = 0
    while i < len(s):
        j = i
        while s[j] == "x":
            j += 1
        k = j
        while k < len(s) and s[k] == "y":
            k += 1
        out.append((j - i, k - j))
        i = k
    return out


@dataclass(frozen=True)
class OrbitCombinatorics:
    """Branch-line data of a Lorenz orbit.

    ``p_rank`` / ``q_rank`` map word positions (0-based) to ranks; ``pi`` is
    the first-return permutation as a tuple indexed by branch position
    ``1..L`` (``pi[0]`` is unused and set to 0).
    """

    word: LorenzWord
    a: int
    b: int
    t: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    p_rank: dict[int, int] = field(repr=False)
    q_rank: dict[int, int] = field(repr=False)
    pi: tuple[int, ...] = field(repr=False)
    mu: tuple[int, ...]
    nu: tuple[int, ...]

    @property
    def L(self) -> int:
        return self.a + self.b

    def branch_position(self, pos: int) -> int:
        """Left-to-right branch position (1-based) of the point at word position ``pos``."""
        if pos in self.p_rank:
            return self.p_rank[pos]
        return self.L + 1 - self.q_rank[pos]

    def p_successor(self) -> dict[int, tuple[str, int]]:
        """For each p-rank, the landing point of its arc as ``('p'|'q', rank)``."""
        return self._successors(self.p_rank)

    def q_successor(self) -> dict[int, tuple[str, int]]:
        return self._successors(self.q_rank)

    def _successors(self, ranks):
        L = self.L
        out = {}
        for pos, r in ranks.items():
            nxt = (pos + 1) % L
            if nxt in self.p_rank:
                out[r] = ("p", self.p_rank[nxt])
            else:
                out[r] = ("q", self.q_rank[nxt])
        return out


def orbit_combinatorics(w: LorenzWord) -> OrbitCombinatorics:
    s = w.letters
    L = len(s)
    d = s + s
    # primitive => distinct rotations already differ within L letters
    keys = {i: d[i:i + L] for i in range(L)}
    if len(set(keys.values())) != L:
        raise ConsistencyError(f"tied rotations in {s!r}")
    xs = sorted((i for i in range(L) if s[i] == "x"), key=keys.__getitem__)
    ys = sorted((i for i in range(L) if s[i] == "y"), key=keys.__getitem__, reverse=True)
    p_rank = {pos: r for r, pos in enumerate(xs, 1)}
    q_rank = {pos: r for r, pos in enumerate(ys, 1)}
    a, b = len(xs), len(ys)

    mu = tuple(sorted(p_rank[i] for i in xs if s[i - 1] == "y"))
    nu = tuple(sorted(q_rank[i] for i in ys if s[i - 1] == "x"))
    syl = syllables(w)

    def bpos(pos):
        return p_rank[pos] if pos in p_rank else L + 1 - q_rank[pos]

    pi = [0] * (L + 1)
    for pos in range(L):
        pi[bpos(pos)] = bpos((pos + 1) % L)

    oc = OrbitCombinatorics(
        word=w, a=a, b=b, t=len(syl),
        alpha=tuple(x for x, _ in syl), beta=tuple(y for _, y in syl),
        p_rank=p_rank, q_rank=q_rank, pi=tuple(pi), mu=mu, nu=nu,
    )
    check_orbit(oc)
    return oc


def check_orbit(oc: OrbitCombinatorics) -> None:
    """Raise :class:`ConsistencyError` unless every structural invariant holds."""
    a, b, t = oc.a, oc.b, oc.t
    problems = []
    if sum(oc.alpha) != a or sum(oc.beta) != b or a + b != len(oc.word):
        problems.append("letter counts")
    if t < 1 or len(oc.mu) != t or len(oc.nu) != t:
        problems.append("trip number")
    if oc.mu[0] != 1 or oc.nu[0] != 1:
        problems.append("mu_1 = nu_1 = 1")
    if list(oc.mu) != sorted(set(oc.mu)) or list(oc.nu) != sorted(set(oc.nu)):
        problems.append("mu/nu strictly increasing")
    pi = oc.pi
    if sorted(pi[1:]) != list(range(1, a + b + 1)):
        problems.append("pi is a permutation")
    left = [pi[i] for i in range(1, a + 1)]
    right = [pi[i] for i in range(a + 1, a + b + 1)]
    if left != sorted(left) or right != sorted(right):
        problems.append("first return monotone on both halves")
    # the mu ranks are exactly the p-points hit from the right half
    if tuple(sorted(v for v in right if v <= a)) != oc.mu:
        problems.append("mu = images of q-points")
    if tuple(sorted(a + b + 1 - v for v in left if v > a)) != oc.nu:
        problems.append("nu = images of p-points")
    if problems:
        raise ConsistencyError(f"{oc.word}: " + ", ".join(problems))
