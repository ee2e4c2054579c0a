"""Exponential, logarithm and the Baker-Campbell-Hausdorff group of [B].

Everything is computed exactly in the unital hull. ``exp`` and ``log`` are
finite sums because ``B`` is nilpotent, so the BCH product
``log(exp(u) exp(v))`` needs no series coefficients. Only characteristic
zero is supported: ``k!`` must be invertible for every ``k`` below the
nilpotency degree.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .group import UnitalElement, group_commutator
from .lie import _split, find_specialization, generic_pair, witness_dict
from .quotient import AlgebraElement, QuotientAlgebra
from .report import FAIL, PASS, Claim


class CharacteristicError(ValueError):
    """Raised when exp/log are requested in positive characteristic."""


def _require_char0(alg: QuotientAlgebra):
    if alg.characteristic != 0:
        raise CharacteristicError(
            f"exp/log need 1/k! for k < {alg.nilpotency_degree}, which does not exist in "
            f"characteristic {alg.characteristic}; the BCH group is defined only in characteristic 0")


def exp_unital(u: AlgebraElement) -> UnitalElement:
    """``1 + u + u^2/2! + ...`` (finite because ``u`` is nilpotent)."""
    alg = u.algebra
    _require_char0(alg)
    total = u
    power = u
    for k in range(2, alg.nilpotency_degree):
        power = power * u
        if not power:
            break
        total = total + power.scale(Fraction(1, factorial(k)))
    return UnitalElement.from_part(total)


def log_unital(g: UnitalElement) -> AlgebraElement:
    """``p - p^2/2 + p^3/3 - ...`` for ``g = 1 + p``."""
    p = g.part
    alg = p.algebra
    _require_char0(alg)
    if g.constant != g.domain.one:
        raise ValueError("log is defined on 1 + B only")
    total = p
    power = p
    for k in range(2, alg.nilpotency_degree):
        power = power * p
        if not power:
            break
        total = total + power.scale(Fraction((-1) ** (k + 1), k))
    return total


def phi(u: AlgebraElement) -> AlgebraElement:
    """``log(1 + u)``: the isomorphism from the adjoint group to the BCH group."""
    return log_unital(UnitalElement.from_part(u))


def bch_product(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    return log_unital(exp_unital(u) * exp_unital(v))


class StarElement:
    """Point of the BCH group on [B]."""

    __slots__ = ("value",)

    def __init__(self, value: AlgebraElement):
        _require_char0(value.algebra)
        self.value = value

    def __mul__(self, other: "StarElement") -> "StarElement":
        if not isinstance(other, StarElement):
            return NotImplemented
        return StarElement(bch_product(self.value, other.value))

    def inverse(self) -> "StarElement":
        return StarElement(-self.value)

    def is_one(self) -> bool:
        return not self.value

    def __eq__(self, other):
        if isinstance(other, StarElement):
            return self.value == other.value
        return NotImplemented

    __hash__ = None

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"StarElement({self.value})"


def star_engel_word(u: AlgebraElement, v: AlgebraElement, n: int) -> StarElement:
    """``(u, v, ..., v)`` in the BCH group with ``v`` repeated ``n`` times."""
    x, y = StarElement(u), StarElement(v)
    yinv = y.inverse()
    out = x
    for _ in range(n):
        out = group_commutator(out, y, yinv)
    return out


def star_engel_check(alg: QuotientAlgebra, n: int, expected: str = PASS) -> Claim:
    """Generic Engel check in the BCH group, plus the value at (log(1+x), log(1+y))."""
    _require_char0(alg)
    u, v = generic_pair(alg)
    word = star_engel_word(u, v, n)
    ok = word.is_one()
    witness = None
    a, b = alg.gen("x"), alg.gen("y")
    at_gens = star_engel_word(phi(a), phi(b), n)
    if not ok:
        base = alg.field

        def confirm(vals):
            su, sv = _split(vals, alg, base)
            return not star_engel_word(su, sv, n).is_one()

        values = find_specialization(word.value, confirm)
        if values is None:
            witness = {"generic_value": str(word.value)}
        else:
            su, sv = _split({k: base.convert(x) for k, x in values.items()}, alg, base)
            witness = witness_dict(su, sv, star_engel_word(su, sv, n))
        witness["value_at_log_generators"] = str(at_gens)
    return Claim(
        id=f"bch.star-engel-{n}",
        statement=f"the BCH group of [B] is {n}-Engel",
        anchor="BCH group of a 5-Engel Lie algebra need not be 5-Engel",
        status=PASS if ok else FAIL,
        expected=expected,
        witness=witness,
        details=[f"value at (log(1+x), log(1+y)): {at_gens}"],
    )
