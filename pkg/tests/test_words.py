import pytest
from hypothesis import given, settings, strategies as st

from lorenzknots.errors import (
    ConsistencyError,
    EmptyWord,
    InvalidLetter,
    PeriodicWord,
    SingleLetterWord,
)
from lorenzknots.harness import iter_words
from lorenzknots.words import (
    LorenzWord,
    is_primitive,
    least_rotation_index,
    orbit_combinatorics,
    parse_word,
    rotate,
    swap_letters,
    syllables,
)

from oracles import branch_order_brute, least_rotation_brute

words = st.text(alphabet="xy", min_size=2, max_size=16).filter(
    lambda s: "x" in s and "y" in s and is_primitive(s)
)


def test_parse_canonicalizes():
    assert parse_word("yyx").letters == "xyy"
    assert parse_word("  YXy ").letters == "xyy"


@pytest.mark.parametrize(
    "text, exc",
    [("", EmptyWord), ("   ", EmptyWord), ("xyz", InvalidLetter), ("xxx", SingleLetterWord),
     ("y", SingleLetterWord), ("xyxy", PeriodicWord), ("xyyxyy", PeriodicWord)],
)
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_word(text)


def test_fig3_word():
    w = parse_word("xxxyyyxyy")
    oc = orbit_combinatorics(w)
    assert (oc.a, oc.b) == (4, 5)


def test_noncanonical_construction_rejected():
    with pytest.raises(ConsistencyError):
        LorenzWord("yx")


@pytest.mark.parametrize(
    "s, expected",
    [("xxxyyyxyy", [(3, 3), (1, 2)]), ("xy", [(1, 1)]), ("xyxyy", [(1, 1), (1, 2)])],
)
def test_syllables(s, expected):
    assert syllables(parse_word(s)) == expected


def test_example_mu_nu():
    oc = orbit_combinatorics(parse_word("xxxyyyxyy"))
    assert oc.mu == (1, 3) and oc.nu == (1, 3) and oc.t == 2


def test_xyxyy_against_brute_force():
    # frozen from branch_order_brute("xyxyy")
    oc = orbit_combinatorics(parse_word("xyxyy"))
    assert (oc.mu, oc.nu, oc.t) == ((1, 2), (1, 2), 2)
    p, q, mu, nu = branch_order_brute("xyxyy")
    assert (mu, nu) == (oc.mu, oc.nu)
    assert p == oc.p_rank and q == oc.q_rank


@pytest.mark.parametrize("s", ["xy", "xxy", "xyy", "xxxxyyy"])
def test_t1(s):
    oc = orbit_combinatorics(parse_word(s))
    assert oc.t == 1 and oc.mu == (1,) and oc.nu == (1,)


def test_exhaustive_against_brute_force():
    for w in iter_words(12):
        oc = orbit_combinatorics(w)
        p, q, mu, nu = branch_order_brute(w.letters)
        assert (p, q, mu, nu) == (oc.p_rank, oc.q_rank, oc.mu, oc.nu), w


@given(words)
def test_least_rotation(s):
    assert rotate(s, least_rotation_index(s)) == least_rotation_brute(s)


@given(words)
def test_idempotent(s):
    w = parse_word(s)
    assert parse_word(w.letters) == w


@given(words, st.integers(0, 40))
def test_rotation_invariance(s, k):
    a = orbit_combinatorics(parse_word(s))
    b = orbit_combinatorics(parse_word(rotate(s, k)))
    assert (a.word, a.mu, a.nu, a.pi) == (b.word, b.mu, b.nu, b.pi)


@settings(max_examples=200)
@given(words)
def test_letter_swap(s):
    a = orbit_combinatorics(parse_word(s))
    b = orbit_combinatorics(parse_word(swap_letters(s)))
    assert (a.a, a.mu, a.t) == (b.b, b.nu, b.t)
    assert (a.b, a.nu) == (b.a, b.mu)


@given(words)
def test_pi_single_cycle(s):
    oc = orbit_combinatorics(parse_word(s))
    seen, j = set(), 1
    while j not in seen:
        seen.add(j)
        j = oc.pi[j]
    assert len(seen) == oc.L
