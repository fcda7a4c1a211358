"""Closed-form invariants of a Lorenz knot, computed from branch-line data alone.

All arithmetic is exact integer arithmetic.  The Alexander grading of the
distinguished grid state and the unknotting number share one formula; both are
reported so that callers can compare each against its own direct computation.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import IntegralityViolation, NegativeGenus
from .words import OrbitCombinatorics


@dataclass(frozen=True)
class InvariantRecord:
    grid_number: int
    crossings_total: int
    crossings_A: int
    crossings_B: int
    crossings_C: int
    unknotting: int
    alexander_x_minus_closed: int


def _half(twice: int, what: str) -> int:
    if twice % 2:
        raise IntegralityViolation(f"{what}: 2*value = {twice} is odd")
    return twice // 2


def unknotting_closed(a: int, b: int, t: int, mu, nu) -> int:
    """``((a+b)(t-1) - sum(mu) - sum(nu) + t + 1) / 2``."""
    return _half((a + b) * (t - 1) - sum(mu) - sum(nu) + t + 1, "unknotting number")


def crossings_A(a: int, t: int, mu) -> int:
    return a * t - sum(mu) - t * t + t * (t + 1) // 2


def crossings_B(b: int, t: int, nu) -> int:
    return b * t - sum(nu) - t * t + t * (t + 1) // 2


def crossings_total(a: int, b: int, t: int, mu, nu) -> int:
    return (a + b) * t - sum(mu) - sum(nu) + t


def strand_crossings_vertical(b: int, t: int, nu) -> list[int]:
    """Crossings in part B on long vertical ``k`` (index ``k-1``)."""
    return [(b - nu_k) - (t - k) for k, nu_k in enumerate(nu, 1)]


def strand_crossings_horizontal(a: int, t: int, mu) -> list[int]:
    """Crossings in part A on long horizontal ``k`` (index ``k-1``)."""
    return [(a - mu_k) - (t - k) for k, mu_k in enumerate(mu, 1)]


def j_oo_closed(a: int, b: int, t: int, mu):
    return a * t - sum(mu) - t * t + t * (t + 1) // 2 + b * (2 * b - 1)


def j_xx_closed(a: int, b: int, t: int, nu):
    return b * t - sum(nu) - t * t + t * (t + 1) // 2 + 2 * a * a - a


def winding_sum_closed(a: int, b: int, t: int, nu) -> int:
    """Minus the total winding number of the distinguished state."""
    return a * a - b * b + b + b * t - sum(nu)


def closed_form_invariants(oc: OrbitCombinatorics) -> InvariantRecord:
    a, b, t, mu, nu = oc.a, oc.b, oc.t, oc.mu, oc.nu
    u = unknotting_closed(a, b, t, mu, nu)
    cA, cB, cC = crossings_A(a, t, mu), crossings_B(b, t, nu), t * t
    c = crossings_total(a, b, t, mu, nu)
    if c != cA + cB + cC:
        raise IntegralityViolation(f"c={c} but c_A+c_B+c_C={cA + cB + cC}")
    if u < 0:
        raise NegativeGenus(f"u={u}")
    if 2 * u != c - (a + b) + 1:
        raise IntegralityViolation("u disagrees with the positive-braid count")
    return InvariantRecord(
        grid_number=2 * a + 2 * b - t,
        crossings_total=c,
        crossings_A=cA,
        crossings_B=cB,
        crossings_C=cC,
        unknotting=u,
        alexander_x_minus_closed=u,
    )


def positive_braid_unknotting(k: int, n_strands: int) -> int:
    """Unknotting number of the closure of a positive braid knot: ``(k - n + 1) / 2``."""
    twice = k - n_strands + 1
    if twice < 0:
        raise NegativeGenus(f"k={k}, n={n_strands}: k - n + 1 < 0")
    return _half(twice, f"positive braid (k={k}, n={n_strands})")
