"""Free associative algebra without unity: words, polynomials, brackets."""

from __future__ import annotations

from math import comb
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .scalars import QQ, VariantMismatch, _join_signed, _signed_term


class Word(tuple):
    """A non-empty word in generator indices.

    Words compare, hash and concatenate as their letter tuples; canonical
    order is :func:`word_key` (length first, then lexicographic).
    """

    __slots__ = ()

    def __new__(cls, letters: Iterable[int]):
        w = super().__new__(cls, letters)
        if not w:
            raise ValueError("a word has at least one letter")
        return w

    @property
    def degree(self) -> int:
        return len(self)

    def multidegree(self, ngens: int) -> Tuple[int, ...]:
        counts = [0] * ngens
        for g in self:
            counts[g] += 1
        return tuple(counts)

    def __add__(self, other):
        return Word(tuple.__add__(self, other))

    def render(self, names: Sequence[str]) -> str:
        parts = []
        i = 0
        while i < len(self):
            j = i
            while j < len(self) and self[j] == self[i]:
                j += 1
            run = j - i
            parts.append(names[self[i]] if run == 1 else f"{names[self[i]]}^{run}")
            i = j
        return "*".join(parts)

    def __repr__(self):
        return f"Word({tuple(self)})"


def word_key(w: Sequence[int]):
    return (len(w), tuple(w))


def word_divides(m: Sequence[int], n: Sequence[int]) -> bool:
    """True iff ``m`` occurs as a contiguous subword of ``n``."""
    lm, ln = len(m), len(n)
    if lm > ln:
        return False
    m = tuple(m)
    n = tuple(n)
    return any(n[i:i + lm] == m for i in range(ln - lm + 1))


def subwords(w: Sequence[int]) -> set:
    """All distinct non-empty contiguous subwords of ``w``."""
    w = tuple(w)
    return {Word(w[i:j]) for i in range(len(w)) for j in range(i + 1, len(w) + 1)}


class FreePolynomial:
    """Finite linear combination of words over a coefficient domain."""

    __slots__ = ("terms", "gens", "domain")

    def __init__(self, terms: Mapping[Word, object], gens: Sequence[str], domain=QQ):
        self.gens = tuple(gens)
        self.domain = domain
        self.terms: Dict[Word, object] = {}
        for w, c in terms.items():
            c = domain.convert(c)
            if c:
                self.terms[Word(w)] = c

    @classmethod
    def generator(cls, name: str, gens: Sequence[str], domain=QQ) -> "FreePolynomial":
        return cls({Word((tuple(gens).index(name),)): 1}, gens, domain)

    @classmethod
    def word(cls, w: Sequence[int], gens: Sequence[str], domain=QQ, coeff=1) -> "FreePolynomial":
        return cls({Word(w): coeff}, gens, domain)

    @classmethod
    def zero(cls, gens: Sequence[str], domain=QQ) -> "FreePolynomial":
        return cls({}, gens, domain)

    @staticmethod
    def _raw(terms, gens, domain) -> "FreePolynomial":
        p = object.__new__(FreePolynomial)
        p.terms = terms
        p.gens = gens
        p.domain = domain
        return p

    def _check(self, other: "FreePolynomial"):
        if not isinstance(other, FreePolynomial):
            raise VariantMismatch(f"cannot combine a free polynomial with {type(other).__name__}")
        if other.gens != self.gens:
            raise VariantMismatch("free polynomials over different generators")
        if other.domain != self.domain:
            raise VariantMismatch(f"free polynomials over {self.domain} and {other.domain}")

    def __add__(self, other):
        if not isinstance(other, FreePolynomial):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = terms[w] + c if w in terms else c
            if s:
                terms[w] = s
            else:
                terms.pop(w, None)
        return FreePolynomial._raw(terms, self.gens, self.domain)

    def __neg__(self):
        return FreePolynomial._raw({w: -c for w, c in self.terms.items()}, self.gens, self.domain)

    def __sub__(self, other):
        if not isinstance(other, FreePolynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "FreePolynomial":
        c = self.domain.convert(c)
        if not c:
            return FreePolynomial.zero(self.gens, self.domain)
        return FreePolynomial._raw({w: v * c for w, v in self.terms.items()}, self.gens, self.domain)

    def __mul__(self, other):
        if isinstance(other, FreePolynomial):
            self._check(other)
            terms: Dict[Word, object] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    s = terms[w] + c1 * c2 if w in terms else c1 * c2
                    terms[w] = s
            return FreePolynomial._raw({w: c for w, c in terms.items() if c}, self.gens, self.domain)
        if self.domain.accepts(other) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if self.domain.accepts(other) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, FreePolynomial):
            return self.gens == other.gens and self.domain == other.domain and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, w: Sequence[int]):
        return self.terms.get(Word(w), self.domain.zero)

    def words(self):
        return sorted(self.terms, key=word_key)

    def homogeneous_component(self, degree: int) -> "FreePolynomial":
        return FreePolynomial._raw(
            {w: c for w, c in self.terms.items() if len(w) == degree}, self.gens, self.domain
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = [_signed_term(self.terms[w], w.render(self.gens)) for w in self.words()]
        return _join_signed(parts)

    def __repr__(self):
        return f"FreePolynomial({self})"


def lie_bracket(u, v):
    """``uv - vu`` for any pair of elements of one associative algebra."""
    return u * v - v * u


def engel_bracket(u, v, k: int):
    """Left-normed bracket ``[u, v, ..., v]`` with ``v`` repeated ``k`` times."""
    if k < 1:
        raise ValueError("Engel bracket length must be at least 1")
    out = u
    for _ in range(k):
        out = lie_bracket(out, v)
    return out


def left_normed(elements: Sequence):
    """``[e0, e1, ..., en]`` bracketed from the left."""
    out = elements[0]
    for e in elements[1:]:
        out = lie_bracket(out, e)
    return out


def engel_closed_form(k: int, gens: Sequence[str] = ("x", "y"), domain=QQ,
                      first: int = 0, second: int = 1) -> FreePolynomial:
    """Binomial expansion of ``[x, y, ..., y]`` (``y`` repeated ``k`` times).

    The result is the sum over ``i`` of ``C(k, i) (-1)^i y^i x y^(k-i)``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    terms = {}
    for i in range(k + 1):
        w = Word((second,) * i + (first,) + (second,) * (k - i))
        terms[w] = (-1) ** i * comb(k, i)
    return FreePolynomial(terms, gens, domain)
