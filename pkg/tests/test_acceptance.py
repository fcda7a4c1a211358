"""Acceptance criteria, each at its stated tolerance, with one PASS/FAIL line apiece."""
import json
import time

import pytest

from lorenzknots import build_grid, enumerate_crossings, orbit_combinatorics, parse_word
from lorenzknots.braid import alexander_polynomial, lorenz_braid
from lorenzknots.cli import analyze
from lorenzknots.harness import enumerate_words, verify_corpus
from lorenzknots.invariants import positive_braid_unknotting
from lorenzknots.laurent import LaurentPoly
from lorenzknots.unknotting import unknotting_set


@pytest.fixture
def report(capsys):
    def emit(n, name, ok, detail=""):
        with capsys.disabled():
            print(f"\n[criterion {n}] {'PASS' if ok else 'FAIL'}: {name} {detail}".rstrip())
        assert ok, detail
    return emit


@pytest.fixture(scope="module")
def serial_summary():
    t0 = time.perf_counter()
    s = verify_corpus(12, jobs=1)
    return s, time.perf_counter() - t0


def _dump(s):
    return json.dumps(s, sort_keys=True)


def test_1_example_reproduction(report):
    t0 = time.perf_counter()
    d = analyze("xxxyyyxyy")
    dt = time.perf_counter() - t0
    ok = (d["mu"] == [1, 3] and d["nu"] == [1, 3] and (d["a"], d["b"], d["t"]) == (4, 5, 2)
          and d["unknotting"] == 2 and d["crossings"]["total"] == 12 and dt < 1)
    report(1, "example reproduction", ok, f"mu={d['mu']} nu={d['nu']} u={d['unknotting']} "
           f"c={d['crossings']['total']} {dt:.3f}s")


def test_2_trefoil(report):
    t0 = time.perf_counter()
    oc = orbit_combinatorics(parse_word("xyxyy"))
    u = analyze("xyxyy")["unknotting"]
    br = lorenz_braid(oc)
    delta = alexander_polynomial(br)
    dt = time.perf_counter() - t0
    ok = (u == 1 and delta.equivalent(LaurentPoly((1, -1, 1))) and delta.spread == 2 * u
          and br.strands == 5 and br.k == 6 and positive_braid_unknotting(br.k, br.strands) == 1
          and dt < 1)
    report(2, "trefoil oracle", ok, f"u={u} delta={delta} strands={br.strands} k={br.k} {dt:.3f}s")


def test_3_corpus_identities(report, serial_summary):
    s, dt = serial_summary
    ok = s["pass"] and s["words"] == 745 and dt < 60
    report(3, "corpus identity suite", ok,
           f"{s['passed']}/{s['words']} words, {len(s['checks'])} checks each, {dt:.1f}s")


def test_4_degenerate_anchors(report):
    bad = []
    t1 = [w for w in enumerate_words(12) if "yx" not in w.letters]
    for w in t1:
        oc = orbit_combinatorics(w)
        rep = unknotting_set(build_grid(oc))
        if rep.U != 0 or rep.changes:
            bad.append(w.letters)
    g = build_grid(orbit_combinatorics(parse_word("xy")))
    ok = not bad and g.n == 3 and len(enumerate_crossings(g)) == 1
    report(4, "degenerate anchors", ok, f"{len(t1)} t=1 words, bad={bad}, xy n={g.n}")


def test_5_determinism(report, serial_summary):
    s, _ = serial_summary
    again = verify_corpus(12, jobs=1)
    parallel = verify_corpus(12, jobs=4)
    ok = _dump(s) == _dump(again) == _dump(parallel)
    report(5, "determinism", ok, "serial, repeated and 4-worker summaries compared byte for byte")
