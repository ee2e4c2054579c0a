from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from engelcheck.freealg import Word, subwords, word_divides
from engelcheck.presentation import (DegreeCap, GeneratorDegreeCap, PresentationError, PresentationSpec,
                                     enumerate_survivors, monomial_ideal_member, verify_monomial_memberships)
from engelcheck.report import PASS

DEG7 = ("y*x*y^3*x*y", "y^2*x*y*x*y^2")


@pytest.mark.parametrize("text,member", [
    ("y^4", True),
    ("x^2", True),
    ("x*y^2*x", True),
    ("y^2*x*y^2", True),
    ("x*y*x*y^3", True),
    ("y^3*x*y*x", True),
    ("x^3", True),
    ("x*y*x*y*x", True),
    ("y^2*x*y*x*y^2", False),
    ("y*x*y^3*x*y", False),
    ("x*y^3*x*y", False),
    ("y", False),
])
def test_membership(spec, text, member):
    assert monomial_ideal_member(spec, spec.word(text)) is member


def test_foreign_generator_rejected(spec):
    with pytest.raises(PresentationError):
        monomial_ideal_member(spec, (0, 2))


def _all_words(max_len):
    for d in range(1, max_len + 1):
        yield from (Word(w) for w in product((0, 1), repeat=d))


def test_membership_oracle(spec):
    """Members of degree <= 8 are exactly the words that divide neither kept word."""
    tops = [spec.word(t) for t in DEG7]
    for w in _all_words(8):
        assert monomial_ideal_member(spec, w) is not any(word_divides(w, t) for t in tops)


def test_survivors(spec):
    by_deg = enumerate_survivors(spec, by_degree=True)
    assert tuple(len(by_deg[d]) for d in range(1, 8)) == (2, 3, 5, 6, 6, 4, 2)
    assert {spec.render_word(w) for w in by_deg[6]} == {"x*y^3*x*y", "y*x*y*x*y^2", "y*x*y^3*x", "y^2*x*y*x*y"}
    assert {spec.render_word(w) for w in by_deg[7]} == set(DEG7)
    oracle = set().union(*(subwords(spec.word(t)) for t in DEG7))
    assert set(enumerate_survivors(spec)) == oracle


def test_survivors_sorted_and_divisor_closed(spec):
    surv = enumerate_survivors(spec)
    assert surv == sorted(surv, key=lambda w: (len(w), tuple(w)))
    s = set(surv)
    assert all(sub in s for w in surv for sub in subwords(w))


def test_survivors_independent_of_characteristic(spec):
    base = enumerate_survivors(spec)
    for p in (2, 3, 5, 7):
        assert enumerate_survivors(spec.with_characteristic(p)) == base


@given(st.lists(st.integers(0, 1), min_size=1, max_size=5),
       st.lists(st.integers(0, 1), max_size=3), st.lists(st.integers(0, 1), max_size=3))
def test_membership_upward_closed(spec, w, left, right):
    if monomial_ideal_member(spec, w):
        assert monomial_ideal_member(spec, left + w + right)


def test_monomial_membership_claims(spec):
    claims = verify_monomial_memberships(spec)
    assert [c.id for c in claims] == ["relations.monomial-members", "relations.x1-y56-vanish",
                                      "relations.survivors-divide-support",
                                      "relations.divisor-clause-generated"]
    assert all(c.status == PASS for c in claims)


def test_unbounded_and_invalid_specs():
    spec = PresentationSpec(("x",), 0, (GeneratorDegreeCap("x", 3),))
    with pytest.raises(PresentationError):
        enumerate_survivors(spec)
    with pytest.raises(PresentationError):
        PresentationSpec(("x", "x"), 0, (DegreeCap(3),))
    with pytest.raises(PresentationError):
        PresentationSpec(("x",), 6, (DegreeCap(3),))
    with pytest.raises(PresentationError):
        PresentationSpec(("x",), 0, (GeneratorDegreeCap("y", 3),))


def test_generic_spec_language():
    """A free nilpotent algebra: every word of length < 4 survives."""
    spec = PresentationSpec(("a", "b", "c"), 0, (DegreeCap(4),))
    assert len(enumerate_survivors(spec)) == 3 + 9 + 27


def test_monomial_part(spec):
    mono = spec.monomial_part()
    assert len(mono.relations) == 4
    assert not mono.polynomial_clauses()
    assert spec.with_characteristic(3).outside_hypotheses
