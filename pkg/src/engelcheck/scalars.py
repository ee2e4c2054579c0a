"""Exact scalar arithmetic.

Three kinds of scalar are supported:

* rationals -- plain ``int`` and :class:`fractions.Fraction` values,
* prime-field residues -- :class:`Mod`,
* sparse multivariate polynomials over either -- :class:`Polynomial`.

Values of different kinds never mix silently; an operation between a
``Mod`` and a ``Fraction``, between residues of different moduli, or between
polynomials over different indeterminate sets raises :class:`VariantMismatch`.
Integers are accepted everywhere as literals of the prime ring.

A *domain* (``QQ``, ``GF(p)``, :class:`PolynomialRing`) names the kind of
scalar an algebra element carries and produces its zero, one and integer
images.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union


class VariantMismatch(TypeError):
    """Raised when scalars of incompatible kinds are combined."""


# ---------------------------------------------------------------------------
# prime fields


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Mod:
    """Residue class ``residue mod modulus`` for a prime modulus."""

    __slots__ = ("residue", "modulus")

    def __init__(self, residue: int, modulus: int):
        self.residue = residue % modulus
        self.modulus = modulus

    def _coerce(self, other) -> Optional[int]:
        if isinstance(other, Mod):
            if other.modulus != self.modulus:
                raise VariantMismatch(
                    f"cannot combine residues mod {self.modulus} and mod {other.modulus}"
                )
            return other.residue
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        if isinstance(other, (Fraction, Polynomial)):
            raise VariantMismatch(f"cannot combine {self!r} with {type(other).__name__}")
        return None

    def __add__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return Mod(self.residue + r, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return Mod(self.residue - r, self.modulus)

    def __rsub__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return Mod(r - self.residue, self.modulus)

    def __mul__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return Mod(self.residue * r, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.residue, self.modulus)

    def __pos__(self):
        return self

    def inverse(self) -> "Mod":
        if self.residue == 0:
            raise ZeroDivisionError(f"0 is not invertible mod {self.modulus}")
        return Mod(pow(self.residue, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return self * Mod(r, self.modulus).inverse()

    def __rtruediv__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return Mod(r, self.modulus) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Mod(pow(self.residue, k, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.modulus == other.modulus and self.residue == other.residue
        if isinstance(other, int) and not isinstance(other, bool):
            return (self.residue - other) % self.modulus == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __bool__(self):
        return self.residue != 0

    def __repr__(self):
        return f"Mod({self.residue}, {self.modulus})"

    def __str__(self):
        return f"{self.residue} mod {self.modulus}"


# ---------------------------------------------------------------------------
# weighted indeterminates and polynomials

# A monomial is the sorted tuple of indeterminate indices with repetition,
# e.g. alpha*beta^2 over (alpha, beta) is (0, 1, 1).
Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class WeightedVariableSet:
    names: Tuple[str, ...]
    weights: Tuple[int, ...]

    def __post_init__(self):
        if len(self.names) != len(self.weights):
            raise ValueError("names and weights differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("indeterminate names must be unique")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive integers")

    @classmethod
    def uniform(cls, names: Sequence[str]) -> "WeightedVariableSet":
        return cls(tuple(names), (1,) * len(names))

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def weight(self, mono: Monomial) -> int:
        return _monomial_weight(self.weights, mono)

    def exponents(self, mono: Monomial) -> Dict[int, int]:
        exps: Dict[int, int] = {}
        for i in mono:
            exps[i] = exps.get(i, 0) + 1
        return exps

    def monomial(self, exponents: Mapping[str, int]) -> Monomial:
        """Build a monomial from ``{name: exponent}``."""
        out = []
        for name, e in exponents.items():
            if e < 0:
                raise ValueError("negative exponent")
            out.extend([self.index(name)] * e)
        return tuple(sorted(out))

    def render_monomial(self, mono: Monomial) -> str:
        parts = []
        for i, e in sorted(self.exponents(mono).items()):
            parts.append(self.names[i] if e == 1 else f"{self.names[i]}^{e}")
        return "*".join(parts)


@functools.lru_cache(maxsize=1 << 18)
def _monomial_weight(weights: Tuple[int, ...], mono: Monomial) -> int:
    return sum(weights[i] for i in mono)


def _merge(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    return tuple(sorted(m1 + m2))


def _grlex_key(mono: Monomial):
    # graded, then lexicographic with lower indeterminate index first
    return (len(mono), tuple(-i for i in mono))


class Polynomial:
    """Sparse polynomial in weighted commuting indeterminates.

    ``base`` is the coefficient field (``QQ`` or a ``GF(p)``); coefficients
    are stored as that field's scalars and zero coefficients are never kept.
    """

    __slots__ = ("terms", "vars", "base")

    def __init__(self, terms: Mapping[Monomial, object], vars: WeightedVariableSet, base):
        self.vars = vars
        self.base = base
        self.terms = {m: c for m, c in terms.items() if c}

    @classmethod
    def variable(cls, vars: WeightedVariableSet, name: str, base) -> "Polynomial":
        return cls({(vars.index(name),): base.one}, vars, base)

    @classmethod
    def constant(cls, value, vars: WeightedVariableSet, base) -> "Polynomial":
        return cls({(): base.convert(value)}, vars, base)

    def _check(self, other: "Polynomial"):
        if other.vars != self.vars:
            raise VariantMismatch("polynomials over different indeterminate sets")
        if other.base != self.base:
            raise VariantMismatch(f"polynomials over {self.base} and {other.base}")

    def _lift(self, other):
        """Return ``other`` as a polynomial in this ring, or None."""
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, bool):
            return None
        if self.base.accepts(other):
            return Polynomial({(): self.base.convert(other)}, self.vars, self.base)
        if isinstance(other, (int, Fraction, Mod)):
            raise VariantMismatch(f"cannot combine a polynomial over {self.base} with {other!r}")
        return None

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in o.terms.items():
            if m in terms:
                s = terms[m] + c
                if s:
                    terms[m] = s
                else:
                    del terms[m]
            else:
                terms[m] = c
        return Polynomial._raw(terms, self.vars, self.base)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self.terms.items()}, self.vars, self.base)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            o = self._lift(other)
            if o is None:
                return NotImplemented
            return self.scale(o.terms.get((), 0))
        self._check(other)
        return poly_mul_truncated(self, other, self.vars, None)

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, c) -> "Polynomial":
        if not c:
            return Polynomial._raw({}, self.vars, self.base)
        return Polynomial._raw({m: v * c for m, v in self.terms.items()}, self.vars, self.base)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Polynomial.constant(1, self.vars, self.base)
        for _ in range(k):
            result = result * self
        return result

    def inverse(self) -> "Polynomial":
        if not self.terms:
            raise ZeroDivisionError("inversion of the zero polynomial")
        if set(self.terms) != {()}:
            raise ValueError("only nonzero constant polynomials are invertible")
        return Polynomial._raw({(): self.base.inverse(self.terms[()])}, self.vars, self.base)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.vars == other.vars and self.base == other.base and self.terms == other.terms
        if isinstance(other, (int, Fraction, Mod)) and not isinstance(other, bool):
            if not other:
                return not self.terms
            return set(self.terms) == {()} and self.terms[()] == other
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- inspection ------------------------------------------------------

    @staticmethod
    def _raw(terms, vars, base) -> "Polynomial":
        p = object.__new__(Polynomial)
        p.terms = terms
        p.vars = vars
        p.base = base
        return p

    def is_constant(self) -> bool:
        return set(self.terms) <= {()}

    def max_weight(self) -> int:
        return max((self.vars.weight(m) for m in self.terms), default=0)

    def truncate(self, cap: int) -> "Polynomial":
        return Polynomial._raw(
            {m: c for m, c in self.terms.items() if self.vars.weight(m) <= cap},
            self.vars, self.base,
        )

    def coefficient(self, mono: Monomial):
        return self.terms.get(tuple(sorted(mono)), self.base.zero)

    def variables(self) -> set:
        return {i for m in self.terms for i in m}

    def evaluate(self, values: Mapping[int, object]):
        """Substitute base-field values for indeterminates (missing ones are 0)."""
        total = self.base.zero
        for m, c in self.terms.items():
            t = c
            for i in m:
                v = values.get(i, 0)
                if not v:
                    t = 0
                    break
                t = t * v
            if t:
                total = total + t
        return total

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: _grlex_key(mc[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            mono = self.vars.render_monomial(m)
            out.append(_signed_term(c, mono))
        return _join_signed(out)

    def __repr__(self):
        return f"Polynomial({self})"


def poly_mul_truncated(x: Polynomial, y: Polynomial, vars: WeightedVariableSet,
                       cap: Optional[int]) -> Polynomial:
    """Product of ``x`` and ``y`` with every term of weight above ``cap`` dropped.

    ``cap=None`` keeps everything.
    """
    if x.vars != vars or y.vars != vars:
        raise VariantMismatch("polynomials over different indeterminate sets")
    if x.base != y.base:
        raise VariantMismatch(f"polynomials over {x.base} and {y.base}")
    weights = vars.weights
    terms: Dict[Monomial, object] = {}
    if cap is None:
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                m = _merge(m1, m2)
                prev = terms.get(m)
                terms[m] = c1 * c2 if prev is None else prev + c1 * c2
    else:
        ys = [(m2, c2, _monomial_weight(weights, m2)) for m2, c2 in y.terms.items()]
        for m1, c1 in x.terms.items():
            room = cap - _monomial_weight(weights, m1)
            if room < 0:
                continue
            for m2, c2, w2 in ys:
                if w2 > room:
                    continue
                m = _merge(m1, m2)
                prev = terms.get(m)
                terms[m] = c1 * c2 if prev is None else prev + c1 * c2
    return Polynomial._raw({m: c for m, c in terms.items() if c}, vars, x.base)


# ---------------------------------------------------------------------------
# rendering helpers shared with the algebra modules


def format_scalar(c) -> str:
    if isinstance(c, Polynomial):
        return f"({c})" if len(c.terms) > 1 else str(c)
    return str(c)


def _signed_term(c, body: str) -> Tuple[str, str]:
    """Split ``c*body`` into a sign and an unsigned text."""
    if isinstance(c, Polynomial):
        if len(c.terms) == 1:
            (m, k), = c.terms.items()
            sign, text = _signed_term(k, c.vars.render_monomial(m))
            if body:
                text = f"{text}*{body}" if text != "1" else body
            return sign, text
        return "+", f"({c})*{body}" if body else str(c)
    if isinstance(c, Mod):
        r = c.residue
        if not body:
            return "+", str(r)
        return "+", body if r == 1 else f"{r}*{body}"
    negative = c < 0
    a = -c if negative else c
    sign = "-" if negative else "+"
    if not body:
        return sign, str(a)
    if a == 1:
        return sign, body
    return sign, f"{a}*{body}"


def _join_signed(parts: Sequence[Tuple[str, str]]) -> str:
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


# ---------------------------------------------------------------------------
# domains


class RationalField:
    """The field of rationals; elements are ``int`` or ``Fraction``."""

    characteristic = 0
    zero = 0
    one = 1

    def accepts(self, x) -> bool:
        return isinstance(x, (int, Fraction)) and not isinstance(x, bool)

    def convert(self, x):
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            raise VariantMismatch(f"{x!r} is not a rational")
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        return x

    def inverse(self, x):
        if not x:
            raise ZeroDivisionError("inversion of zero")
        return Fraction(1, 1) / x

    def divide(self, x, y):
        if not y:
            raise ZeroDivisionError("division by zero")
        q = Fraction(x) / y
        return q.numerator if q.denominator == 1 else q

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field with ``p`` elements; elements are :class:`Mod`."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.characteristic = p
        self.zero = Mod(0, p)
        self.one = Mod(1, p)

    def accepts(self, x) -> bool:
        if isinstance(x, Mod):
            return x.modulus == self.characteristic
        return isinstance(x, int) and not isinstance(x, bool)

    def convert(self, x) -> Mod:
        if isinstance(x, Mod):
            if x.modulus != self.characteristic:
                raise VariantMismatch(f"residue mod {x.modulus} is not in {self}")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.characteristic == 0:
                raise ZeroDivisionError(f"{x} has no image in {self}")
            return Mod(x.numerator, self.characteristic) / x.denominator
        if isinstance(x, int) and not isinstance(x, bool):
            return Mod(x, self.characteristic)
        raise VariantMismatch(f"{x!r} cannot be read in {self}")

    def inverse(self, x: Mod) -> Mod:
        return self.convert(x).inverse()

    def divide(self, x, y):
        return self.convert(x) * self.inverse(y)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __repr__(self):
        return f"GF({self.characteristic})"


QQ = RationalField()


@functools.lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_for(characteristic: int):
    return QQ if characteristic == 0 else GF(characteristic)


class PolynomialRing:
    """Domain of :class:`Polynomial` scalars over ``base`` in ``vars``."""

    def __init__(self, base, vars: WeightedVariableSet):
        self.base = base
        self.vars = vars
        self.characteristic = base.characteristic
        self.zero = Polynomial._raw({}, vars, base)
        self.one = Polynomial._raw({(): base.one}, vars, base)

    def accepts(self, x) -> bool:
        if isinstance(x, Polynomial):
            return x.vars == self.vars and x.base == self.base
        return self.base.accepts(x)

    def convert(self, x) -> Polynomial:
        if isinstance(x, Polynomial):
            if x.vars != self.vars or x.base != self.base:
                raise VariantMismatch("polynomial from another ring")
            return x
        return Polynomial._raw({(): self.base.convert(x)}, self.vars, self.base) if x else self.zero

    def gen(self, name: str) -> Polynomial:
        return Polynomial.variable(self.vars, name, self.base)

    def inverse(self, x: Polynomial) -> Polynomial:
        return self.convert(x).inverse()

    def divide(self, x, y):
        return self.convert(x) * self.inverse(y)

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and other.base == self.base and other.vars == self.vars

    def __hash__(self):
        return hash((self.base, self.vars))

    def __repr__(self):
        return f"{self.base}[{', '.join(self.vars.names)}]"


def domain_of(x):
    """Smallest domain containing the scalar ``x``."""
    if isinstance(x, Polynomial):
        return PolynomialRing(x.base, x.vars)
    if isinstance(x, Mod):
        return GF(x.modulus)
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return QQ
    raise VariantMismatch(f"{x!r} is not a scalar")


def inverse(x):
    """Multiplicative inverse of a scalar; raises on zero and non-units."""
    if isinstance(x, (Mod, Polynomial)):
        return x.inverse()
    return QQ.inverse(x)


def same_variant(x, y) -> bool:
    try:
        return domain_of(x) == domain_of(y)
    except VariantMismatch:
        return False


def reduce_mod(x, p: int) -> Mod:
    """Canonical image of a rational in GF(p)."""
    return GF(p).convert(x)


Scalar = Union[int, Fraction, Mod, Polynomial]
