"""Ideal presentations and monomial-ideal membership."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Dict, List, Sequence, Tuple, Union

from .freealg import FreePolynomial, Word, word_divides, word_key
from .report import Claim, check
from .scalars import field_for, is_prime


class PresentationError(ValueError):
    """An ill-formed or unusable presentation."""


@dataclass(frozen=True)
class DegreeCap:
    """Every word of at least this degree lies in the ideal."""
    min_total_degree: int


@dataclass(frozen=True)
class GeneratorDegreeCap:
    """Every word with at least ``min_degree`` occurrences of ``generator``."""
    generator: str
    min_degree: int


@dataclass(frozen=True)
class DegreeSliceExcept:
    """Every word of exactly ``degree`` other than ``kept_words``."""
    degree: int
    kept_words: Tuple[Word, ...]


@dataclass(frozen=True)
class DivisorSupport:
    """Every word of degree <= ``max_degree`` dividing none of ``support_words``."""
    max_degree: int
    support_words: Tuple[Word, ...]


@dataclass(frozen=True)
class ExplicitPolynomial:
    polynomial: FreePolynomial
    name: str = ""


MonomialClause = Union[DegreeCap, GeneratorDegreeCap, DegreeSliceExcept, DivisorSupport]
Clause = Union[MonomialClause, ExplicitPolynomial]


@dataclass(frozen=True)
class PresentationSpec:
    generators: Tuple[str, ...]
    characteristic: int = 0
    relations: Tuple[Clause, ...] = ()
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relations", tuple(self.relations))
        if not self.generators:
            raise PresentationError("at least one generator is required")
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError("generator names must be unique")
        if self.characteristic != 0 and not is_prime(self.characteristic):
            raise PresentationError(
                f"characteristic must be 0 or a prime, got {self.characteristic}")
        n = len(self.generators)
        for clause in self.relations:
            words: Sequence[Word] = ()
            if isinstance(clause, DegreeSliceExcept):
                words = clause.kept_words
            elif isinstance(clause, DivisorSupport):
                words = clause.support_words
            elif isinstance(clause, GeneratorDegreeCap):
                if clause.generator not in self.generators:
                    raise PresentationError(f"unknown generator {clause.generator!r}")
            elif isinstance(clause, ExplicitPolynomial):
                if clause.polynomial.gens != self.generators:
                    raise PresentationError("relation polynomial over foreign generators")
                words = list(clause.polynomial.terms)
            for w in words:
                if any(not 0 <= g < n for g in w):
                    raise PresentationError(f"word {tuple(w)} uses an undeclared generator")

    # -- derived data ----------------------------------------------------

    @property
    def outside_hypotheses(self) -> bool:
        """Characteristic 2 or 3, where no Engel result is asserted."""
        return self.characteristic in (2, 3)

    @property
    def field(self):
        return field_for(self.characteristic)

    @property
    def degree_bound(self) -> int:
        caps = [c.min_total_degree for c in self.relations if isinstance(c, DegreeCap)]
        if not caps:
            raise PresentationError("unbounded presentation: no degree_cap clause")
        return min(caps)

    def monomial_clauses(self) -> List[MonomialClause]:
        return [c for c in self.relations if not isinstance(c, ExplicitPolynomial)]

    def polynomial_clauses(self) -> List[ExplicitPolynomial]:
        return [c for c in self.relations if isinstance(c, ExplicitPolynomial)]

    def monomial_part(self) -> "PresentationSpec":
        """The presentation with the explicit polynomial relations removed."""
        return replace(self, relations=tuple(self.monomial_clauses()),
                       name=(self.name + " (monomial part)").strip())

    def with_characteristic(self, p: int) -> "PresentationSpec":
        return replace(self, characteristic=p)

    def word(self, text: str) -> Word:
        from .parse import parse_word
        return parse_word(text, self.generators)

    def render_word(self, w) -> str:
        return Word(w).render(self.generators)


def _is_relation_word(clauses: Sequence[MonomialClause], gens: Sequence[str], s: tuple) -> bool:
    for c in clauses:
        if isinstance(c, DegreeCap):
            if len(s) >= c.min_total_degree:
                return True
        elif isinstance(c, GeneratorDegreeCap):
            g = gens.index(c.generator)
            if s.count(g) >= c.min_degree:
                return True
        elif isinstance(c, DegreeSliceExcept):
            if len(s) == c.degree and s not in c.kept_words:
                return True
        elif isinstance(c, DivisorSupport):
            if len(s) <= c.max_degree and not any(word_divides(s, t) for t in c.support_words):
                return True
    return False


def monomial_ideal_member(spec: PresentationSpec, w) -> bool:
    """Is ``w`` a multiple of one of the monomial relations of ``spec``?"""
    w = tuple(w)
    if not w:
        raise PresentationError("the empty word is not an element of the algebra")
    n = len(spec.generators)
    if any(not 0 <= g < n for g in w):
        raise PresentationError(f"word {w} uses a generator foreign to the presentation")
    clauses = spec.monomial_clauses()
    gens = spec.generators
    return any(
        _is_relation_word(clauses, gens, w[i:j])
        for i in range(len(w)) for j in range(i + 1, len(w) + 1)
    )


def enumerate_survivors(spec: PresentationSpec, by_degree: bool = False):
    """Words outside the monomial ideal, in canonical order.

    Survivors are closed under taking prefixes, so they are grown one letter
    at a time from the survivors of the previous degree.
    """
    bound = spec.degree_bound
    n = len(spec.generators)
    level = [Word((g,)) for g in range(n) if not monomial_ideal_member(spec, (g,))]
    found = list(level)
    for _ in range(2, bound + 1):
        level = [w + Word((g,)) for w in level for g in range(n)]
        level = [w for w in level if not monomial_ideal_member(spec, w)]
        found.extend(level)
    found.sort(key=word_key)
    if not by_degree:
        return found
    groups: Dict[int, List[Word]] = {}
    for w in found:
        groups.setdefault(len(w), []).append(w)
    return groups


MONOMIAL_WORDS = ("x^2", "x*y^2*x", "y^4", "y^2*x*y^2", "x*y*x*y^3", "y^3*x*y*x")


def verify_monomial_memberships(spec: PresentationSpec) -> List[Claim]:
    """Checks on the monomial relations of the x, y presentation."""
    claims = []
    if set(spec.generators) != {"x", "y"}:
        raise PresentationError("these checks are stated for generators x and y")
    x, y = spec.generators.index("x"), spec.generators.index("y")
    missing = [t for t in MONOMIAL_WORDS if not monomial_ideal_member(spec, spec.word(t))]
    claims.append(check(
        "relations.monomial-members",
        "x^2, x*y^2*x, y^4, y^2*x*y^2, x*y*x*y^3, y^3*x*y*x lie in the monomial ideal",
        "monomial consequences of the divisor clause", not missing,
        witness={"not_members": missing} if missing else None,
    ))

    survivors = enumerate_survivors(spec)
    bad = [spec.render_word(w) for w in survivors
           if w.count(x) == 1 and w.count(y) >= 5]
    claims.append(check(
        "relations.x1-y56-vanish",
        "no surviving word has x-degree 1 and y-degree 5 or 6",
        "degree-1-in-x words", not bad,
        witness={"survivors": bad} if bad else None,
    ))

    supports = [c.support_words for c in spec.monomial_clauses() if isinstance(c, DivisorSupport)]
    targets = [w for ws in supports for w in ws]
    orphans = [spec.render_word(w) for w in survivors
               if not any(word_divides(w, t) for t in targets)]
    claims.append(check(
        "relations.survivors-divide-support",
        "every surviving word divides one of the support words",
        "multiples of the monomial relations", bool(targets) and not orphans,
        witness={"orphans": orphans} if orphans or not targets else None,
    ))

    gens6 = [spec.word(t) for t in MONOMIAL_WORDS]
    others = [c for c in spec.monomial_clauses() if not isinstance(c, DivisorSupport)]
    nonmult = []
    for d in range(1, 7):
        for w in _all_words(len(spec.generators), d):
            in_iv = any(isinstance(c, DivisorSupport) and len(w) <= c.max_degree
                        and not any(word_divides(w, t) for t in c.support_words)
                        for c in spec.monomial_clauses())
            if not in_iv or _is_relation_word(others, spec.generators, tuple(w)):
                continue
            if not any(word_divides(g, w) for g in gens6):
                nonmult.append(spec.render_word(w))
    claims.append(check(
        "relations.divisor-clause-generated",
        "every word excluded only by the divisor clause is a multiple of the six listed words",
        "converse of the monomial consequences", not nonmult,
        witness={"words": nonmult} if nonmult else None,
    ))
    return claims


def _all_words(n: int, d: int):
    from itertools import product
    for letters in product(range(n), repeat=d):
        yield Word(letters)
