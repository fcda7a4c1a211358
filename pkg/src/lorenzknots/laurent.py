"""Exact Laurent polynomials in one variable ``s`` with integer coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InexactDivision


# -- dense coefficient lists (index = exponent), the workhorse for determinants


def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def padd(p, q):
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return _trim(out)


def psub(p, q):
    return padd(p, [-c for c in q])


def pmul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def pdivexact(p, q):
    """Quotient of ``p`` by ``q``; raises :class:`InexactDivision` on any remainder."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    p = list(p)
    if not p:
        return []
    dq = len(q) - 1
    lead = q[-1]
    quot = [0] * max(len(p) - dq, 0)
    for i in range(len(p) - 1 - dq, -1, -1):
        c = p[i + dq]
        if c == 0:
            continue
        if c % lead:
            raise InexactDivision(f"coefficient {c} not divisible by {lead}")
        m = c // lead
        quot[i] = m
        for j, qc in enumerate(q):
            p[i + j] -= m * qc
    if any(p):
        raise InexactDivision("nonzero remainder")
    return _trim(quot)


def det_bareiss(M: list[list[list[int]]]) -> list[int]:
    """Determinant of a square matrix of polynomials by fraction-free elimination."""
    n = len(M)
    if n == 0:
        return [1]
    M = [[list(e) for e in row] for row in M]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return []
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = psub(pmul(M[i][j], M[k][k]), pmul(M[i][k], M[k][j]))
                M[i][j] = pdivexact(num, prev)
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return [sign * c for c in d]


@dataclass(frozen=True)
class LaurentPoly:
    """``sum(coeffs[i] * s**(low + i))``; the zero polynomial has empty ``coeffs``."""

    coeffs: tuple[int, ...]
    low: int = 0

    def __post_init__(self):
        c = list(self.coeffs)
        lo = self.low
        while c and c[-1] == 0:
            c.pop()
        while c and c[0] == 0:
            c.pop(0)
            lo += 1
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "low", lo if c else 0)

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> "LaurentPoly":
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls(())
        lo, hi = min(terms), max(terms)
        return cls(tuple(terms.get(e, 0) for e in range(lo, hi + 1)), lo)

    def terms(self) -> dict[int, int]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    @property
    def spread(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else 0

    def __call__(self, s):
        if self.low < 0 and isinstance(s, int):
            s = Fraction(s)
        return sum(c * s ** (self.low + i) for i, c in enumerate(self.coeffs))

    def __add__(self, other):
        t = self.terms()
        for e, c in other.terms().items():
            t[e] = t.get(e, 0) + c
        return LaurentPoly.from_dict(t)

    def __neg__(self):
        return LaurentPoly(tuple(-c for c in self.coeffs), self.low)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return LaurentPoly(tuple(pmul(list(self.coeffs), list(other.coeffs))), self.low + other.low)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs and self.low == other.low

    def __hash__(self):
        return hash((self.coeffs, self.low))

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly(self.coeffs, self.low + k)

    def normalized(self) -> "LaurentPoly":
        """Unit multiple centred on exponent 0 with positive value at ``s = 1``
        (or positive leading coefficient when that value is 0)."""
        if not self.coeffs:
            return self
        if self.spread % 2:
            raise ValueError("odd spread cannot be centred")
        p = LaurentPoly(self.coeffs, -(self.spread // 2))
        v = sum(p.coeffs)
        if v < 0 or (v == 0 and p.coeffs[-1] < 0):
            p = -p
        return p

    def equivalent(self, other: "LaurentPoly") -> bool:
        """Equality up to multiplication by ``±s^k``."""
        return self.coeffs == other.coeffs or self.coeffs == tuple(-c for c in other.coeffs)

    def is_symmetric(self) -> bool:
        c = self.coeffs
        return c == c[::-1] or c == tuple(-x for x in c[::-1])

    def sparse(self) -> str:
        """``coeff·s^e`` terms, exponents ascending."""
        return " ".join(f"{c}·s^{e}" for e, c in sorted(self.terms().items()))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.terms().items()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("s" if e == 1 else f"s^{e}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return " ".join([head] + [f"{sg} {bd}" for sg, bd in parts[1:]])

    def __repr__(self):
        return f"LaurentPoly({self})"
