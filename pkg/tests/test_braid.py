from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lorenzknots import orbit_combinatorics, parse_word
from lorenzknots.braid import (
    alexander_polynomial,
    cycle_count,
    inversion_count,
    lorenz_braid,
    reduced_burau,
)
from lorenzknots.errors import InexactDivision, MultiComponent
from lorenzknots.harness import iter_words
from lorenzknots.invariants import closed_form_invariants, positive_braid_unknotting
from lorenzknots.laurent import LaurentPoly, det_bareiss, pdivexact, pmul

from oracles import left_right_inversions, sympy_alexander_torus


def braid(s):
    return lorenz_braid(orbit_combinatorics(parse_word(s)))


@pytest.mark.parametrize("s, n, k", [("xyxyy", 5, 6), ("xxxyyyxyy", 9, 12), ("xy", 2, 1)])
def test_strands_and_crossings(s, n, k):
    br = braid(s)
    assert (br.strands, br.k, inversion_count(br)) == (n, k, k)
    assert left_right_inversions(s) == k


def test_t1_crossings():
    for a, b in [(1, 1), (2, 3), (4, 1), (3, 5)]:
        s = "x" * a + "y" * b
        assert braid(s).k == a + b - 1


def test_trefoil_alexander():
    d = alexander_polynomial(braid("xyxyy"))
    assert d.equivalent(LaurentPoly((1, -1, 1)))
    assert d.spread == 2
    assert positive_braid_unknotting(6, 5) == 1


def test_unknot_alexander():
    assert alexander_polynomial(braid("xy")) == LaurentPoly((1,))


def test_fig3_spread():
    assert alexander_polynomial(braid("xxxyyyxyy")).spread == 4


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_torus_family(m):
    # (xy)^(m-1) y closes to the (m-1, m) torus knot
    s = "xy" * (m - 1) + "y"
    oracle = LaurentPoly(tuple(sympy_alexander_torus(m - 1, m)))
    d = alexander_polynomial(braid(s))
    assert d.equivalent(oracle)
    assert closed_form_invariants(orbit_combinatorics(parse_word(s))).unknotting == (m - 2) * (m - 1) // 2


def test_positive_permutation_braid():
    for w in iter_words(10):
        br = lorenz_braid(orbit_combinatorics(w))
        assert all(1 <= g < br.strands for g in br.word)
        assert br.k == inversion_count(br)
        assert cycle_count(br.pi) == 1


def test_corpus_delta():
    for w in iter_words(10):
        oc = orbit_combinatorics(w)
        d = alexander_polynomial(lorenz_braid(oc))
        u = closed_form_invariants(oc).unknotting
        assert abs(d(1)) == 1 and d.spread == 2 * u and d.is_symmetric(), w


def test_multi_component_rejected():
    from lorenzknots.braid import BraidData

    br = BraidData(2, (0, 1, 2), ("", "L", "R"), ())
    with pytest.raises(MultiComponent):
        alexander_polynomial(br)


def test_burau_identity():
    assert reduced_burau((), 3) == [[[1], []], [[], [1]]]


# Laurent arithmetic

polys = st.builds(
    LaurentPoly,
    st.lists(st.integers(-5, 5), max_size=6).map(tuple),
    st.integers(-4, 4),
)


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) * r == p * r + q * r
    assert p - p == LaurentPoly(())


@given(polys, st.integers(-3, 3))
def test_shift_equivalent(p, k):
    assert p.shift(k).equivalent(p)
    assert (-p).equivalent(p)


def test_evaluation_and_format():
    p = LaurentPoly((1, -1, 1), -1)
    assert p(1) == 1 and p(2) == Fraction(3, 2)
    assert str(p) == "s^-1 - 1 + s"
    assert p.sparse() == "1·s^-1 -1·s^0 1·s^1"
    assert LaurentPoly((1, 2, 1), 3).normalized() == LaurentPoly((1, 2, 1), -1)


def test_exact_division():
    assert pdivexact(pmul([1, 1], [2, -3, 1]), [1, 1]) == [2, -3, 1]
    with pytest.raises(InexactDivision):
        pdivexact([1, 0, 1], [1, 1])


def test_bareiss_det():
    # [[1, s], [s, 1]] has determinant 1 - s^2
    assert det_bareiss([[[1], [0, 1]], [[0, 1], [1]]]) == [1, 0, -1]
