"""Parsers for noncommutative polynomial expressions and presentation documents.

Expression grammar (whitespace is insignificant)::

    expr   := [sign] term (sign term)*
    term   := integer ('*' factor)+ | factor ('*' factor)*
    factor := generator ['^' positive-integer]

Products must be written with ``*``; ``xy`` is read as a single (probably
unknown) generator name. Constant terms are rejected because the free
algebra has no unity.

Presentation documents are YAML mappings::

    generators: [x, y]
    characteristic: 0
    relations:
      - {kind: degree_cap, degree: 8}
      - {kind: generator_degree_cap, generator: x, degree: 3}
      - {kind: degree_slice_except, degree: 7, keep: ["y*x*y^3*x*y"]}
      - {kind: divisor_support, max_degree: 6, support: ["y*x*y^3*x*y"]}
      - {kind: polynomial, name: h2, poly: "2*y*x*y^3*x*y - 5*y^2*x*y*x*y^2"}
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from typing import List, Sequence

import yaml

from .freealg import FreePolynomial, Word
from .presentation import (
    DegreeCap,
    DegreeSliceExcept,
    DivisorSupport,
    ExplicitPolynomial,
    GeneratorDegreeCap,
    PresentationError,
    PresentationSpec,
)
from .scalars import QQ


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")

    def pointer(self) -> str:
        return f"{self.text}\n{' ' * self.position}^"


class OutsideHypothesesWarning(UserWarning):
    """Characteristic 2 or 3 was requested."""


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^])|(?P<bad>\S))")


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> List[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        kind = m.lastgroup
        start = m.start(kind)
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", start, text)
        toks.append(_Tok(kind, m.group(kind), start))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, generators: Sequence[str]):
        self.text = text
        self.gens = tuple(generators)
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, message: str, tok: _Tok = None):
        tok = tok or self.tok
        raise ParseError(message, tok.pos, self.text)

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expr(self):
        if self.tok.kind == "end":
            self.error("empty expression")
        terms = []
        sign = 1
        if self.tok.kind == "op" and self.tok.text in "+-":
            sign = -1 if self.take().text == "-" else 1
        terms.append(self.term(sign))
        while self.tok.kind != "end":
            t = self.tok
            if t.kind != "op" or t.text not in "+-":
                self.error(f"expected '+' or '-' but found {t.text!r}" if t.text
                           else "expected '+' or '-'")
            self.take()
            terms.append(self.term(-1 if t.text == "-" else 1))
        return terms

    def term(self, sign: int):
        t = self.tok
        coeff = 1
        letters: List[int] = []
        if t.kind == "int":
            self.take()
            coeff = int(t.text)
            if self.tok.kind != "op" or self.tok.text != "*":
                self.error("constant terms are not allowed (the algebra has no unity)", t)
            self.take()
            letters.extend(self.factor())
        elif t.kind == "name":
            letters.extend(self.factor())
        elif t.kind == "end":
            prev = self.toks[self.i - 1]
            self.error(f"dangling operator {prev.text!r}", prev)
        else:
            self.error("dangling operator" if t.kind == "op" else "expected a term")
        while self.tok.kind == "op" and self.tok.text == "*":
            self.take()
            letters.extend(self.factor())
        return sign * coeff, Word(letters)

    def factor(self) -> List[int]:
        t = self.tok
        if t.kind != "name":
            if t.kind == "end":
                prev = self.toks[self.i - 1]
                self.error(f"dangling operator {prev.text!r}", prev)
            if t.kind == "op":
                self.error("dangling operator: expected a generator")
            self.error(f"expected a generator but found {t.text!r}")
        self.take()
        if t.text not in self.gens:
            self.error(f"unknown generator {t.text!r}", t)
        g = self.gens.index(t.text)
        power = 1
        if self.tok.kind == "op" and self.tok.text == "^":
            self.take()
            e = self.tok
            if e.kind == "op" and e.text == "-":
                self.error("exponent must be >= 1", e)
            if e.kind != "int":
                self.error("expected an exponent after '^'", e)
            self.take()
            power = int(e.text)
            if power < 1:
                self.error("exponent must be >= 1", e)
        return [g] * power


def parse_poly(text: str, generators: Sequence[str], domain=QQ) -> FreePolynomial:
    """Parse a noncommutative polynomial; integer coefficients map into ``domain``."""
    terms = _Parser(text, generators).expr()
    out = FreePolynomial.zero(generators, domain)
    for c, w in terms:
        out = out + FreePolynomial({w: domain.convert(c)}, generators, domain)
    return out


def parse_word(text: str, generators: Sequence[str]) -> Word:
    """Parse a single monic word such as ``y*x*y^3*x*y``."""
    terms = _Parser(text, generators).expr()
    if len(terms) != 1 or terms[0][0] != 1:
        raise ParseError("expected a single monic word", 0, text)
    return terms[0][1]


def render_poly(p: FreePolynomial) -> str:
    return str(p)


# ---------------------------------------------------------------------------
# presentation documents

_KINDS = ("degree_cap", "generator_degree_cap", "degree_slice_except",
          "divisor_support", "polynomial")


def _require(obj: dict, key: str, where: str):
    if key not in obj:
        raise PresentationError(f"{where}: missing key {key!r}")
    return obj[key]


def _int(value, where: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise PresentationError(f"{where}: expected an integer >= {minimum}, got {value!r}")
    return value


def presentation_from_dict(doc: dict) -> PresentationSpec:
    if not isinstance(doc, dict):
        raise PresentationError("presentation document must be a mapping")
    unknown = set(doc) - {"generators", "characteristic", "relations", "name"}
    if unknown:
        raise PresentationError(f"unknown top-level keys: {sorted(unknown)}")
    gens = _require(doc, "generators", "document")
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise PresentationError("generators must be a list of names")
    gens = tuple(gens)
    for g in gens:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", g):
            raise PresentationError(f"invalid generator name {g!r}")
    char = _int(doc.get("characteristic", 0), "characteristic")
    rels = _require(doc, "relations", "document")
    if not isinstance(rels, list):
        raise PresentationError("relations must be a list")
    clauses = []
    for n, r in enumerate(rels):
        where = f"relation {n}"
        if not isinstance(r, dict):
            raise PresentationError(f"{where}: expected a mapping")
        kind = _require(r, "kind", where)
        try:
            if kind == "degree_cap":
                clauses.append(DegreeCap(_int(_require(r, "degree", where), where, 1)))
            elif kind == "generator_degree_cap":
                g = _require(r, "generator", where)
                if g not in gens:
                    raise PresentationError(f"{where}: unknown generator {g!r}")
                clauses.append(GeneratorDegreeCap(g, _int(_require(r, "degree", where), where, 1)))
            elif kind == "degree_slice_except":
                keep = tuple(parse_word(t, gens) for t in _require(r, "keep", where))
                clauses.append(DegreeSliceExcept(_int(_require(r, "degree", where), where, 1), keep))
            elif kind == "divisor_support":
                support = tuple(parse_word(t, gens) for t in _require(r, "support", where))
                clauses.append(DivisorSupport(_int(_require(r, "max_degree", where), where, 0), support))
            elif kind == "polynomial":
                poly = parse_poly(_require(r, "poly", where), gens)
                clauses.append(ExplicitPolynomial(poly, str(r.get("name", ""))))
            else:
                raise PresentationError(f"{where}: unknown relation kind {kind!r} "
                                        f"(expected one of {', '.join(_KINDS)})")
        except ParseError as e:
            raise PresentationError(f"{where}: {e}") from e
    if not any(isinstance(c, DegreeCap) for c in clauses):
        raise PresentationError("unbounded presentation: a degree_cap relation is required")
    spec = PresentationSpec(gens, char, tuple(clauses), str(doc.get("name", "")))
    if spec.outside_hypotheses:
        warnings.warn(f"characteristic {char} is outside the supported characteristics",
                      OutsideHypothesesWarning, stacklevel=2)
    return spec


def parse_presentation(text: str) -> PresentationSpec:
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise PresentationError(f"not a valid YAML document: {e}") from e
    return presentation_from_dict(doc)


def load_presentation(path) -> PresentationSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())


def presentation_to_dict(spec: PresentationSpec) -> dict:
    rels = []
    for c in spec.relations:
        if isinstance(c, DegreeCap):
            rels.append({"kind": "degree_cap", "degree": c.min_total_degree})
        elif isinstance(c, GeneratorDegreeCap):
            rels.append({"kind": "generator_degree_cap", "generator": c.generator,
                         "degree": c.min_degree})
        elif isinstance(c, DegreeSliceExcept):
            rels.append({"kind": "degree_slice_except", "degree": c.degree,
                         "keep": [spec.render_word(w) for w in c.kept_words]})
        elif isinstance(c, DivisorSupport):
            rels.append({"kind": "divisor_support", "max_degree": c.max_degree,
                         "support": [spec.render_word(w) for w in c.support_words]})
        else:
            entry = {"kind": "polynomial", "poly": str(c.polynomial)}
            if c.name:
                entry = {"kind": "polynomial", "name": c.name, "poly": str(c.polynomial)}
            rels.append(entry)
    doc = {}
    if spec.name:
        doc["name"] = spec.name
    doc["generators"] = list(spec.generators)
    doc["characteristic"] = spec.characteristic
    doc["relations"] = rels
    return doc


def render_presentation(spec: PresentationSpec) -> str:
    return yaml.safe_dump(presentation_to_dict(spec), sort_keys=False, allow_unicode=True)
