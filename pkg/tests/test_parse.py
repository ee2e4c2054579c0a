import warnings
from fractions import Fraction

import pytest
import yaml
from hypothesis import given
from hypothesis import strategies as st

from engelcheck.freealg import FreePolynomial, Word
from engelcheck.parse import (OutsideHypothesesWarning, ParseError, parse_poly, parse_presentation,
                              parse_word, presentation_to_dict, render_poly, render_presentation)
from engelcheck.presentation import PresentationError
from engelcheck.scalars import GF, Mod

GENS = ("x", "y")
H1 = "2*x*y^3*x*y - 5*y*x*y*x*y^2 - 2*y*x*y^3*x + 5*y^2*x*y*x*y"
H2 = "2*y*x*y^3*x*y - 5*y^2*x*y*x*y^2"


def test_h1_terms():
    p = parse_poly(H1, GENS)
    assert p.coefficient((0, 1, 1, 1, 0, 1)) == 2
    assert p.coefficient((1, 0, 1, 0, 1, 1)) == -5
    assert p.coefficient((1, 0, 1, 1, 1, 0)) == -2
    assert p.coefficient((1, 1, 0, 1, 0, 1)) == 5
    assert len(p.terms) == 4


def test_h2_terms():
    p = parse_poly(H2, GENS)
    assert p == FreePolynomial({Word((1, 0, 1, 1, 1, 0, 1)): 2, Word((1, 1, 0, 1, 0, 1, 1)): -5}, GENS)


def test_whitespace_and_collection():
    assert parse_poly("  x * y+ y*x -x*y ", GENS) == parse_poly("y*x", GENS)
    assert not parse_poly("2*x - 2*x", GENS)
    assert parse_poly("-x", GENS).coefficient((0,)) == -1


def test_coefficients_map_into_field():
    p = parse_poly("7*x + 3*y", GENS, GF(7))
    assert p.coefficient((0,)) == 0
    assert p.coefficient((1,)) == Mod(3, 7)


def test_multi_character_generators():
    p = parse_poly("ab*c^2", ("ab", "c"))
    assert list(p.words()) == [Word((0, 1, 1))]


# each malformed input with the position of the offending token
MALFORMED = [
    ("x^0", 2, "exponent"),
    ("", 0, "empty"),
    ("   ", 3, "empty"),
    ("x*", 1, "dangling"),
    ("x + ", 2, "dangling"),
    ("x*y^2 -", 6, "dangling"),
    ("-", 0, "dangling"),
    ("*x", 0, "dangling"),
    ("x**y", 2, "dangling"),
    ("x+-y", 2, "dangling"),
    ("2*z", 2, "unknown generator"),
    ("x*y*zz", 4, "unknown generator"),
    ("xy", 0, "unknown generator"),
    ("x^-1", 2, "exponent"),
    ("x y", 2, "expected '+' or '-'"),
    ("3", 0, "constant"),
    ("x + 4", 4, "constant"),
    ("x^", 2, "exponent"),
    ("(x)", 0, "unexpected character"),
    ("x*2", 2, "expected a generator"),
]


@pytest.mark.parametrize("text,position,fragment", MALFORMED)
def test_malformed_inputs(text, position, fragment):
    with pytest.raises(ParseError) as info:
        parse_poly(text, GENS)
    assert info.value.position == position
    assert fragment in info.value.message
    assert info.value.pointer().splitlines()[-1] == " " * position + "^"


def test_parse_word():
    assert parse_word("y*x*y^3*x*y", GENS) == Word((1, 0, 1, 1, 1, 0, 1))
    with pytest.raises(ParseError):
        parse_word("2*x", GENS)
    with pytest.raises(ParseError):
        parse_word("x + y", GENS)


poly_strategy = st.dictionaries(
    st.lists(st.integers(0, 1), min_size=1, max_size=7).map(Word),
    st.fractions(min_value=-5, max_value=5, max_denominator=1).filter(bool),
    max_size=5,
).map(lambda d: FreePolynomial(d, GENS))


@given(poly_strategy)
def test_render_parse_roundtrip(p):
    if not p:
        return
    assert parse_poly(render_poly(p), GENS) == p


def test_fixture_roundtrip(spec):
    assert parse_presentation(render_presentation(spec)) == spec
    assert len(spec.relations) == 6
    assert spec.generators == GENS
    assert spec.characteristic == 0


def _doc(**overrides):
    doc = {"generators": ["x", "y"], "characteristic": 0,
           "relations": [{"kind": "degree_cap", "degree": 4}]}
    doc.update(overrides)
    return yaml.safe_dump(doc)


@pytest.mark.parametrize("char", [2, 3])
def test_small_characteristic_is_flagged(spec, char):
    doc = presentation_to_dict(spec)
    doc["characteristic"] = char
    with pytest.warns(OutsideHypothesesWarning):
        s = parse_presentation(yaml.safe_dump(doc))
    assert s.outside_hypotheses


def test_good_characteristic_not_flagged():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        s = parse_presentation(_doc(characteristic=5))
    assert not s.outside_hypotheses


@pytest.mark.parametrize("doc,fragment", [
    (_doc(relations=[{"kind": "generator_degree_cap", "generator": "x", "degree": 3}]), "unbounded"),
    (_doc(relations=[{"kind": "degree_cap", "degree": 4}, {"kind": "spline"}]), "unknown relation kind"),
    (_doc(relations=[{"kind": "degree_cap"}]), "missing key 'degree'"),
    (_doc(characteristic=4), "characteristic"),
    (_doc(generators="xy"), "generators"),
    (_doc(colour="blue"), "unknown top-level"),
    (_doc(relations=[{"kind": "degree_cap", "degree": 4}, {"kind": "polynomial", "poly": "x*z"}]),
     "unknown generator"),
    (_doc(relations=[{"kind": "degree_cap", "degree": 4},
                     {"kind": "generator_degree_cap", "generator": "q", "degree": 2}]), "unknown generator"),
    ("generators: [x\n", "YAML"),
    ("- just a list\n", "mapping"),
])
def test_schema_violations(doc, fragment):
    with pytest.raises(PresentationError) as info:
        parse_presentation(doc)
    assert fragment in str(info.value)


def test_rational_coefficients_render():
    p = parse_poly("x", GENS).scale(Fraction(1, 2))
    assert "1/2" in render_poly(p)
