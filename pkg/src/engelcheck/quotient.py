"""Finite-dimensional quotients of the free algebra.

:func:`build_quotient` turns a bounded :class:`PresentationSpec` into a
:class:`QuotientAlgebra`: the words surviving the monomial relations span
the monomial quotient C, the explicit polynomial relations generate an ideal
subspace of C (closed under multiplication by generators on both sides),
and the complement of its pivot words is the basis of the final quotient.
Elements are coefficient vectors over that basis.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .freealg import FreePolynomial, Word, word_key
from .linalg import EchelonSpace
from .presentation import PresentationSpec, enumerate_survivors, monomial_ideal_member
from .scalars import (
    Polynomial,
    PolynomialRing,
    VariantMismatch,
    _join_signed,
    _monomial_weight,
    _merge,
    _signed_term,
    field_for,
)


class QuotientAlgebra:
    """Graded basis, rewrite rules and structure constants of ``A / I``."""

    def __init__(self, spec: PresentationSpec, survivors: List[Word], basis: List[Word],
                 rewrite_rows: Dict[Word, Dict[int, object]], ideal_dim: int,
                 table: List[List[Tuple[Tuple[int, object], ...]]]):
        self.spec = spec
        self.gens = spec.generators
        self.field = field_for(spec.characteristic)
        self.characteristic = spec.characteristic
        self.survivors = survivors
        self.basis = basis
        self.index = {w: i for i, w in enumerate(basis)}
        self.degrees = tuple(len(w) for w in basis)
        self.rewrite_rows = rewrite_rows
        self.ideal_dim = ideal_dim
        self.table = table
        self.grading: Dict[int, range] = {}
        for d in sorted(set(self.degrees)):
            idx = [i for i, e in enumerate(self.degrees) if e == d]
            self.grading[d] = range(idx[0], idx[-1] + 1)
        self.nilpotency_degree = _nilpotency_degree(self)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def graded_dims(self) -> Tuple[int, ...]:
        top = max(self.grading, default=0)
        return tuple(len(self.grading.get(d, ())) for d in range(1, top + 1))

    @property
    def outside_hypotheses(self) -> bool:
        return self.spec.outside_hypotheses

    def summary(self) -> dict:
        return {
            "dimension": self.dim,
            "graded_dims": list(self.graded_dims()),
            "nilpotency_degree": self.nilpotency_degree,
            "characteristic": self.characteristic,
            "ideal_subspace_dim": self.ideal_dim,
            "outside_hypotheses": self.outside_hypotheses,
        }

    # -- element construction -------------------------------------------

    def zero(self, domain=None) -> "AlgebraElement":
        domain = domain or self.field
        return AlgebraElement(self, [domain.zero] * self.dim, domain)

    def basis_element(self, i: int, domain=None) -> "AlgebraElement":
        domain = domain or self.field
        coeffs = [domain.zero] * self.dim
        coeffs[i] = domain.one
        return AlgebraElement(self, coeffs, domain)

    def gen(self, name: str) -> "AlgebraElement":
        """Image of a generator."""
        return normal_form(FreePolynomial.generator(name, self.gens, self.field), self)

    def element(self, text: str) -> "AlgebraElement":
        """Image of a polynomial written in the expression syntax."""
        from .parse import parse_poly
        return normal_form(parse_poly(text, self.gens, self.field), self)

    def word_image(self, w: Sequence[int]) -> "AlgebraElement":
        return normal_form(FreePolynomial.word(w, self.gens, self.field), self)

    def render_word(self, w) -> str:
        return Word(w).render(self.gens)

    def structure_table_text(self) -> str:
        """Plain-text dump of the basis and all nonzero basis products."""
        lines = ["# basis", "index\tdegree\tword"]
        for i, w in enumerate(self.basis):
            lines.append(f"{i}\t{len(w)}\t{self.render_word(w)}")
        lines.append("")
        lines.append("# products")
        lines.append("left\tright\tproduct")
        for i in range(self.dim):
            for j in range(self.dim):
                entry = self.table[i][j]
                if entry:
                    parts = [_signed_term(c, self.render_word(self.basis[k])) for k, c in entry]
                    lines.append(f"{self.render_word(self.basis[i])}\t"
                                 f"{self.render_word(self.basis[j])}\t{_join_signed(parts)}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"<QuotientAlgebra dim={self.dim} char={self.characteristic}>"


def _c_vector(p: FreePolynomial, spec: PresentationSpec, field) -> Dict[Word, object]:
    """Image of ``p`` in the monomial quotient, as ``{survivor: coeff}``."""
    out: Dict[Word, object] = {}
    for w, c in p.terms.items():
        if monomial_ideal_member(spec, w):
            continue
        c = field.convert(c)
        if c:
            out[w] = out.get(w, field.zero) + c
    return {w: c for w, c in out.items() if c}


def build_quotient(spec: PresentationSpec, characteristic: Optional[int] = None) -> QuotientAlgebra:
    """Construct the quotient algebra presented by ``spec``."""
    if characteristic is not None:
        spec = spec.with_characteristic(characteristic)
    field = field_for(spec.characteristic)
    survivors = enumerate_survivors(spec)
    survivor_set = set(survivors)
    n = len(spec.generators)

    def shift(vec: Dict[Word, object], g: int, left: bool) -> Dict[Word, object]:
        out: Dict[Word, object] = {}
        for w, c in vec.items():
            nw = Word((g,) + tuple(w)) if left else Word(tuple(w) + (g,))
            if nw in survivor_set:
                out[nw] = c
        return out

    # pivot on the least word: for the x, y presentation this eliminates
    # x*y^3*x*y and y*x*y^3*x*y and keeps y^2*x*y*x*y^2
    space = EchelonSpace(field, pivot_key=word_key)
    queue = [_c_vector(c.polynomial, spec, field) for c in spec.polynomial_clauses()]
    while queue:
        vec = queue.pop()
        if space.add(vec) is None:
            continue
        for g in range(n):
            for left in (True, False):
                nv = shift(vec, g, left)
                if nv:
                    queue.append(nv)

    pivots = set(space.rows)
    basis = [w for w in survivors if w not in pivots]
    index = {w: i for i, w in enumerate(basis)}
    rewrite_rows: Dict[Word, Dict[int, object]] = {}
    for piv, row in space.rows.items():
        rewrite_rows[piv] = {index[w]: -c for w, c in row.items() if w != piv}

    def word_nf(w: Word) -> Tuple[Tuple[int, object], ...]:
        if w not in survivor_set:
            return ()
        if w in index:
            return ((index[w], field.one),)
        return tuple(sorted(rewrite_rows[w].items()))

    table = [[word_nf(Word(tuple(u) + tuple(v))) for v in basis] for u in basis]
    return QuotientAlgebra(spec, survivors, basis, rewrite_rows, len(space), table)


def _nilpotency_degree(alg: QuotientAlgebra) -> int:
    """Least ``n`` with ``B^n = 0``."""
    field = alg.field
    power = [{i: field.one} for i in range(alg.dim)]
    n = 1
    while power:
        n += 1
        space = EchelonSpace(field)
        for vec in power:
            for j in range(alg.dim):
                prod: Dict[int, object] = {}
                for i, c in vec.items():
                    for k, s in alg.table[i][j]:
                        prod[k] = prod.get(k, 0) + c * s
                space.add(prod)
        power = list(space.rows.values())
        if n > alg.dim + 1:
            raise RuntimeError("algebra is not nilpotent")
    return n


def normal_form(p: FreePolynomial, alg: QuotientAlgebra) -> "AlgebraElement":
    """Coordinates of the image of ``p`` in the quotient algebra."""
    if p.gens != alg.gens:
        raise VariantMismatch("polynomial over foreign generators")
    domain = alg.field
    coeffs = [domain.zero] * alg.dim
    for w, c in p.terms.items():
        c = domain.convert(c)
        if w in alg.index:
            k = alg.index[w]
            coeffs[k] = coeffs[k] + c
        elif w in alg.rewrite_rows:
            for k, s in alg.rewrite_rows[w].items():
                coeffs[k] = coeffs[k] + c * s
        elif not monomial_ideal_member(alg.spec, w):
            raise AssertionError(f"survivor {w} has no normal form")  # pragma: no cover
    return AlgebraElement(alg, coeffs, domain)


class AlgebraElement:
    """Coordinate vector over the basis of a :class:`QuotientAlgebra`.

    Coordinates are scalars of ``domain``: the base field, or a
    :class:`PolynomialRing` over it for symbolic (generic) elements.
    """

    __slots__ = ("algebra", "coeffs", "domain")

    def __init__(self, algebra: QuotientAlgebra, coeffs, domain=None):
        self.algebra = algebra
        self.domain = domain or algebra.field
        self.coeffs = [self.domain.convert(c) for c in coeffs]
        if len(self.coeffs) != algebra.dim:
            raise ValueError("coefficient vector has the wrong length")

    @staticmethod
    def _raw(algebra, coeffs, domain) -> "AlgebraElement":
        e = object.__new__(AlgebraElement)
        e.algebra = algebra
        e.coeffs = coeffs
        e.domain = domain
        return e

    def _unify(self, other: "AlgebraElement"):
        if other.algebra is not self.algebra:
            raise VariantMismatch("elements of different algebras")
        if other.domain == self.domain:
            return self, other
        a, b = self.domain, other.domain
        if isinstance(b, PolynomialRing) and b.base == a:
            return self.over(b), other
        if isinstance(a, PolynomialRing) and a.base == b:
            return self, other.over(a)
        raise VariantMismatch(f"elements over {a} and {b}")

    def over(self, domain) -> "AlgebraElement":
        """The same element with coordinates read in ``domain``."""
        return AlgebraElement._raw(self.algebra, [domain.convert(c) for c in self.coeffs], domain)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            if isinstance(other, int) and other == 0:
                return self
            return NotImplemented
        x, y = self._unify(other)
        return AlgebraElement._raw(self.algebra,
                                   [p + q for p, q in zip(x.coeffs, y.coeffs)], x.domain)

    def __radd__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return AlgebraElement._raw(self.algebra, [-c for c in self.coeffs], self.domain)

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        x, y = self._unify(other)
        return AlgebraElement._raw(self.algebra,
                                   [p - q for p, q in zip(x.coeffs, y.coeffs)], x.domain)

    def scale(self, c) -> "AlgebraElement":
        dom = self.domain
        if isinstance(c, Polynomial) and not isinstance(dom, PolynomialRing):
            return self.over(PolynomialRing(c.base, c.vars)).scale(c)
        c = dom.convert(c)
        return AlgebraElement._raw(self.algebra, [v * c for v in self.coeffs], dom)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return elem_mul(self, other)
        try:
            return self.scale(other)
        except VariantMismatch:
            raise
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 1:
            raise ValueError("the algebra has no unity; use positive powers")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            if other.algebra is not self.algebra:
                return False
            try:
                x, y = self._unify(other)
            except VariantMismatch:
                return False
            return all(p == q for p, q in zip(x.coeffs, y.coeffs))
        if isinstance(other, int) and other == 0:
            return not self
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return any(bool(c) for c in self.coeffs)

    # -- inspection --------------------------------------------------------

    def support(self) -> List[int]:
        return [i for i, c in enumerate(self.coeffs) if c]

    def coefficient(self, word) -> object:
        """Coordinate on the basis word ``word`` (text or letter tuple)."""
        if isinstance(word, str):
            from .parse import parse_word
            word = parse_word(word, self.algebra.gens)
        return self.coeffs[self.algebra.index[Word(word)]]

    def min_degree(self) -> Optional[int]:
        s = self.support()
        return min(self.algebra.degrees[i] for i in s) if s else None

    def __str__(self):
        s = self.support()
        if not s:
            return "0"
        parts = [_signed_term(self.coeffs[i], self.algebra.render_word(self.algebra.basis[i]))
                 for i in s]
        return _join_signed(parts)

    def __repr__(self):
        return f"AlgebraElement({self})"


def elem_mul(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """Bilinear product through the structure constants."""
    u, v = u._unify(v)
    alg = u.algebra
    table = alg.table
    dom = u.domain
    us = [(i, c) for i, c in enumerate(u.coeffs) if c]
    vs = [(j, c) for j, c in enumerate(v.coeffs) if c]
    if isinstance(dom, PolynomialRing):
        return _poly_elem_mul(alg, dom, us, vs)
    out = [dom.zero] * alg.dim
    for i, a in us:
        row = table[i]
        for j, b in vs:
            entry = row[j]
            if not entry:
                continue
            ab = a * b
            for k, s in entry:
                out[k] = out[k] + ab * s
    return AlgebraElement._raw(alg, out, dom)


def _poly_elem_mul(alg: QuotientAlgebra, dom: PolynomialRing, us, vs) -> AlgebraElement:
    cap = alg.nilpotency_degree - 1
    weights = dom.vars.weights
    table = alg.table
    acc: Dict[int, dict] = {}
    for i, a in us:
        row = table[i]
        a_terms = [(m, c, _monomial_weight(weights, m)) for m, c in a.terms.items()]
        for j, b in vs:
            entry = row[j]
            if not entry:
                continue
            b_terms = [(m, c, _monomial_weight(weights, m)) for m, c in b.terms.items()]
            prod: dict = {}
            for m1, c1, w1 in a_terms:
                room = cap - w1
                for m2, c2, w2 in b_terms:
                    if w2 > room:
                        continue
                    m = _merge(m1, m2)
                    prev = prod.get(m)
                    prod[m] = c1 * c2 if prev is None else prev + c1 * c2
            for k, s in entry:
                target = acc.setdefault(k, {})
                for m, c in prod.items():
                    prev = target.get(m)
                    target[m] = c * s if prev is None else prev + c * s
    out = [dom.zero] * alg.dim
    for k, terms in acc.items():
        out[k] = Polynomial._raw({m: c for m, c in terms.items() if c}, dom.vars, dom.base)
    return AlgebraElement._raw(alg, out, dom)


def graded_component(u: AlgebraElement, k: int) -> AlgebraElement:
    """Projection onto the span of the basis words of degree ``k``."""
    alg = u.algebra
    rng = alg.grading.get(k, range(0))
    coeffs = [c if i in rng else u.domain.zero for i, c in enumerate(u.coeffs)]
    return AlgebraElement._raw(alg, coeffs, u.domain)


def components_below(u: AlgebraElement, k: int) -> AlgebraElement:
    """Sum of the graded components of degree less than ``k``."""
    alg = u.algebra
    coeffs = [c if alg.degrees[i] < k else u.domain.zero for i, c in enumerate(u.coeffs)]
    return AlgebraElement._raw(alg, coeffs, u.domain)


def in_power(u: AlgebraElement, k: int) -> bool:
    """Does ``u`` lie in ``B^k`` (all components of degree < k vanish)?"""
    return not components_below(u, k)
