"""Exhaustive cross-checking of every identity over small Lorenz words."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import invariants as inv
from .braid import alexander_polynomial, inversion_count, lorenz_braid
from .errors import BoundTooLarge
from .grid import layout_grid, alexander_direct, enumerate_crossings, grid_postconditions, trace_word
from .unknotting import unknotting_set, wrong_counts_by_start
from .words import LorenzWord, orbit_combinatorics, parse_word

MAX_LEN = 64


def lyndon_words(n: int):
    """Lyndon words of length exactly ``n`` over ``x < y``, in lexicographic order (FKM)."""
    a = [0] * (n + 1)

    def gen(t, p):
        if t > n:
            if p == n:
                yield "".join("xy"[i] for i in a[1:])
            return
        a[t] = a[t - p]
        yield from gen(t + 1, p)
        for j in range(a[t - p] + 1, 2):
            a[t] = j
            yield from gen(t + 1, t)

    yield from gen(1, 1)


def iter_words(max_len: int, include_t1: bool = True):
    if not 2 <= max_len <= MAX_LEN:
        raise BoundTooLarge(f"max_len must lie in 2..{MAX_LEN}, got {max_len}")
    for n in range(2, max_len + 1):
        for s in lyndon_words(n):
            # t = 1 exactly for x^a y^b
            if not include_t1 and "yx" not in s:
                continue
            yield LorenzWord(s)


def enumerate_words(max_len: int, include_t1: bool = True) -> list[LorenzWord]:
    """One canonical word per primitive necklace with both letters, by length then lexicographically."""
    return list(iter_words(max_len, include_t1))


@dataclass
class VerificationReport:
    word: str
    u: int | None = None
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict)
    # observations that are reported but never asserted
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    @property
    def first_failure(self) -> str | None:
        for name, ok in self.checks.items():
            if not ok:
                return name
        return None

    def record(self, name: str, ok: bool, detail: str = ""):
        self.checks[name] = bool(ok)
        if detail and not ok:
            self.details[name] = detail

    def to_dict(self, timings: bool = False) -> dict:
        d = {"word": self.word, "u": self.u, "pass": self.ok, "checks": dict(self.checks),
             "info": dict(self.info)}
        if not self.ok:
            d["first_failure"] = self.first_failure
            d["details"] = dict(self.details)
            d["repro"] = f"lorenzknots verify {self.word}"
        if timings:
            d["timings"] = dict(self.timings)
        return d


def verify_word(w: LorenzWord | str) -> VerificationReport:
    if isinstance(w, str):
        w = parse_word(w)
    rep = VerificationReport(word=w.letters)
    clock = time.perf_counter

    t0 = clock()
    oc = orbit_combinatorics(w)
    rec = inv.closed_form_invariants(oc)
    rep.u = u = rec.unknotting
    a, b, t = oc.a, oc.b, oc.t
    rep.timings["closed_form"] = clock() - t0

    t0 = clock()
    g = layout_grid(oc)
    for name, ok, detail in grid_postconditions(g, oc):
        rep.record(name, ok, detail)
    rep.timings["grid"] = clock() - t0

    try:
        A = alexander_direct(g)
        rep.record("alexander_direct=closed=u", A == rec.alexander_x_minus_closed == u, f"A={A} u={u}")
    except Exception as exc:
        rep.record("alexander_direct=closed=u", False, repr(exc))

    try:
        cr = enumerate_crossings(g)
        regions = {k: sum(1 for c in cr if c.region == k) for k in "ABC"}
        ok = (regions == {"A": rec.crossings_A, "B": rec.crossings_B, "C": rec.crossings_C}
              and len(cr) == rec.crossings_total)
        rep.record("crossing_regions", ok, f"{regions} total={len(cr)}")
    except Exception as exc:
        rep.record("crossing_regions", False, repr(exc))

    t0 = clock()
    try:
        un = unknotting_set(g, strict=False)
        rep.record("U=u", un.U == u and len(un.changes) == u, f"U={un.U} changes={len(un.changes)} u={u}")
        rep.record("N_B-N_A=-(t-1)", un.N_B - un.N_A == -(t - 1), f"N_B={un.N_B} N_A={un.N_A}")
        rep.record("regional_wrong_counts",
                   un.wrong_AC == un.u_AC and un.wrong_BC == un.u_BC and un.wrong_C == t * (t - 1) // 2,
                   f"trace {un.wrong_AC}/{un.wrong_BC}/{un.wrong_C} formulas {un.u_AC}/{un.u_BC}")
        bc = [c for c in un.crossings if c.crossing.region in "BC"]
        selfs = [c for c in bc if c.strings[0] == c.strings[1]]
        rep.record("self_B=b_all_right", len(selfs) == b and not any(c.wrong for c in selfs),
                   f"self={len(selfs)} b={b}")
        rep.record("self_A=a", un.self_A == a, f"self_A={un.self_A} a={a}")
        rule = all(c.wrong == (c.strings[0] > c.strings[1]) for c in bc if c.strings[0] != c.strings[1])
        rep.record("BC_right_iff_i<j", rule)
        rep.info["wrong_counts_by_start"] = list(wrong_counts_by_start(g).values())
    except Exception as exc:
        rep.record("U=u", False, repr(exc))
    rep.timings["unknotting"] = clock() - t0

    t0 = clock()
    br = lorenz_braid(oc)
    k = inversion_count(br)
    rep.record("braid_k=c", k == br.k == rec.crossings_total, f"k={k} word={br.k} c={rec.crossings_total}")
    rep.record("braid_u=u", inv.positive_braid_unknotting(k, br.strands) == u)
    try:
        delta = alexander_polynomial(br)
        rep.record("delta(1)=±1", abs(delta(1)) == 1, str(delta))
        rep.record("spread(delta)=2u", delta.spread == 2 * u, f"spread={delta.spread}")
    except Exception as exc:
        rep.record("delta(1)=±1", False, repr(exc))
    rep.timings["braid"] = clock() - t0

    try:
        rep.record("round_trip", trace_word(g) == w)
    except Exception as exc:
        rep.record("round_trip", False, repr(exc))
    return rep


def _verify_summary(w: LorenzWord) -> dict:
    return verify_word(w).to_dict()


def verify_corpus(max_len: int, jobs: int = 1) -> dict:
    """Verify every word up to ``max_len``; the summary does not depend on ``jobs``."""
    words = enumerate_words(max_len, include_t1=True)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_verify_summary, words, chunksize=16))
    else:
        results = [_verify_summary(w) for w in words]
    results.sort(key=lambda d: (len(d["word"]), d["word"]))
    check_names = sorted({c for d in results for c in d["checks"]})
    per_length = {}
    for d in results:
        per_length[str(len(d["word"]))] = per_length.get(str(len(d["word"])), 0) + 1
    failed = [d for d in results if not d["pass"]]
    return {
        "max_len": max_len,
        "words": len(results),
        "passed": len(results) - len(failed),
        "pass": not failed,
        "per_length": per_length,
        "checks": {c: sum(1 for d in results if d["checks"].get(c)) for c in check_names},
        "u_equals_0_iff_t_equals_1": all((d["u"] == 0) == ("yx" not in d["word"]) for d in results),
        "trace_count_start_independent": sum(
            1 for d in results if len(set(d["info"].get("wrong_counts_by_start", [None]))) == 1
        ),
        "failures": failed,
        "results": [[d["word"], d["u"]] for d in results],
    }
