from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from engelcheck.freealg import (FreePolynomial, Word, engel_bracket, engel_closed_form, left_normed,
                                lie_bracket, subwords, word_divides, word_key)
from engelcheck.scalars import GF, Mod, VariantMismatch

GENS = ("x", "y")
X = FreePolynomial.generator("x", GENS)
Y = FreePolynomial.generator("y", GENS)

words = st.lists(st.integers(0, 1), min_size=1, max_size=6).map(Word)
polys = st.dictionaries(words, st.integers(-4, 4), max_size=4).map(lambda d: FreePolynomial(d, GENS))


def test_word_basics():
    w = Word((1, 0, 1, 1, 1, 0, 1))
    assert w.degree == 7
    assert w.multidegree(2) == (2, 5)
    assert w.render(GENS) == "y*x*y^3*x*y"
    assert isinstance(Word((0,)) + Word((1,)), Word)
    with pytest.raises(ValueError):
        Word(())


def test_canonical_order():
    ws = [Word((1, 1)), Word((0,)), Word((0, 1)), Word((1,))]
    assert sorted(ws, key=word_key) == [Word((0,)), Word((1,)), Word((0, 1)), Word((1, 1))]


@pytest.mark.parametrize("m,n,expected", [
    ((0, 1), (1, 0, 1, 1), True),
    ((1, 1, 1), (1, 0, 1, 1), False),
    ((0, 0), (0, 1, 0), False),   # contiguous, not scattered
    ((1, 0, 1), (1, 0, 1), True),
])
def test_word_divides(m, n, expected):
    assert word_divides(m, n) is expected


def test_subwords_of_degree7_words():
    top = subwords((1, 0, 1, 1, 1, 0, 1)) | subwords((1, 1, 0, 1, 0, 1, 1))
    assert [sum(1 for w in top if len(w) == d) for d in range(1, 8)] == [2, 3, 5, 6, 6, 4, 2]


def test_polynomial_arithmetic():
    p = X * Y - Y * X
    assert p == lie_bracket(X, Y)
    assert str(p) == "x*y - y*x"
    assert (p + p).coefficient((0, 1)) == 2
    assert p.scale(Fraction(1, 2)).coefficient((1, 0)) == Fraction(-1, 2)
    assert not (p - p)
    assert (X * X * Y).homogeneous_component(3) == X * X * Y
    assert (X + X * Y).homogeneous_component(1) == X


def test_mixing_generator_sets():
    other = FreePolynomial.generator("x", ("x", "z"))
    with pytest.raises(VariantMismatch):
        X + other


def test_prime_field_coefficients():
    p = FreePolynomial({Word((0,)): 3}, GENS, GF(3))
    assert not p
    q = FreePolynomial({Word((0,)): 4}, GENS, GF(3))
    assert q.coefficient((0,)) == Mod(1, 3)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert lie_bracket(p, q) == -lie_bracket(q, p)
    # Jacobi identity
    total = lie_bracket(lie_bracket(p, q), r) + lie_bracket(lie_bracket(q, r), p) + lie_bracket(lie_bracket(r, p), q)
    assert not total


def _expand_engel(k):
    """Independent oracle: expand [x, y, ..., y] word by word on plain dicts."""
    terms = {(0,): 1}
    for _ in range(k):
        nxt = {}
        for w, c in terms.items():
            for nw, s in ((w + (1,), c), ((1,) + w, -c)):
                nxt[nw] = nxt.get(nw, 0) + s
        terms = {w: c for w, c in nxt.items() if c}
    return terms


@pytest.mark.parametrize("k", range(1, 8))
def test_engel_closed_form(k):
    closed = engel_closed_form(k)
    assert closed == engel_bracket(X, Y, k)
    assert {tuple(w): c for w, c in closed.terms.items()} == _expand_engel(k)
    assert sum(abs(c) for c in closed.terms.values()) == 2 ** k
    assert closed.coefficient((1,) * k + (0,)) == (-1) ** k * comb(k, k)


def test_engel_bracket_validation():
    with pytest.raises(ValueError):
        engel_bracket(X, Y, 0)
    with pytest.raises(ValueError):
        engel_closed_form(0)


def test_left_normed():
    assert left_normed([X, Y, Y]) == engel_bracket(X, Y, 2)
    assert left_normed([X]) == X
