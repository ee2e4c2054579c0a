"""Adjoint group of a nilpotent algebra, realized as ``1 + B`` in the unital hull."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

from .freealg import engel_bracket, lie_bracket
from .lie import (
    _split,
    find_specialization,
    generic_element,
    generic_pair,
    generic_ring,
    witness_dict,
)
from .quotient import AlgebraElement, QuotientAlgebra, components_below, in_power
from .report import EXPLORATORY, FAIL, PASS, Claim
from .scalars import VariantMismatch


class UnitalElement:
    """``constant * 1 + part`` in the unital hull ``F + B``."""

    __slots__ = ("constant", "part")

    def __init__(self, constant, part: AlgebraElement):
        self.part = part
        self.constant = part.domain.convert(constant)

    @classmethod
    def one(cls, alg: QuotientAlgebra, domain=None) -> "UnitalElement":
        domain = domain or alg.field
        return cls(domain.one, alg.zero(domain))

    @classmethod
    def from_part(cls, part: AlgebraElement) -> "UnitalElement":
        """``1 + part``."""
        return cls(part.domain.one, part)

    @property
    def domain(self):
        return self.part.domain

    def is_unit(self) -> bool:
        c = self.constant
        if hasattr(c, "is_constant"):
            return c.is_constant() and bool(c)
        return bool(c)

    def _align(self, other: "UnitalElement"):
        if not isinstance(other, UnitalElement):
            raise VariantMismatch(f"cannot multiply a hull element by {type(other).__name__}")
        if other.domain == self.domain:
            return self, other
        p, q = self.part._unify(other.part)
        return UnitalElement(p.domain.convert(self.constant), p), \
            UnitalElement(q.domain.convert(other.constant), q)

    def __mul__(self, other):
        if not isinstance(other, UnitalElement):
            return NotImplemented
        x, y = self._align(other)
        one = x.domain.one
        part = x.part * y.part
        part = part + (y.part if x.constant == one else y.part.scale(x.constant))
        part = part + (x.part if y.constant == one else x.part.scale(y.constant))
        return UnitalElement(x.constant * y.constant, part)

    def __add__(self, other):
        x, y = self._align(other)
        return UnitalElement(x.constant + y.constant, x.part + y.part)

    def __sub__(self, other):
        x, y = self._align(other)
        return UnitalElement(x.constant - y.constant, x.part - y.part)

    def inverse(self) -> "UnitalElement":
        if not self.is_unit():
            raise ZeroDivisionError("element of the hull with zero constant term is not a unit")
        dom = self.domain
        one = dom.one
        if self.constant == one:
            return UnitalElement(one, quasi_inverse(self.part))
        cinv = dom.inverse(self.constant)
        return UnitalElement(cinv, quasi_inverse(self.part.scale(cinv)).scale(cinv))

    def is_one(self) -> bool:
        return self.constant == self.domain.one and not self.part

    def __eq__(self, other):
        if isinstance(other, UnitalElement):
            try:
                x, y = self._align(other)
            except VariantMismatch:
                return False
            return x.constant == y.constant and x.part == y.part
        if isinstance(other, int) and other == 1:
            return self.is_one()
        return NotImplemented

    __hash__ = None

    def __str__(self):
        c = str(self.constant)
        if not self.part:
            return c
        text = str(self.part)
        if not self.constant:
            return text
        if text.startswith("-"):
            return f"{c} - {text[1:]}"
        return f"{c} + {text}"

    def __repr__(self):
        return f"UnitalElement({self})"


# ---------------------------------------------------------------------------
# adjoint operations


def circle(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """Adjoint product ``u + v + uv``."""
    return u + v + u * v


def quasi_inverse(u: AlgebraElement) -> AlgebraElement:
    """``-u + u^2 - u^3 + ...``, the inverse of ``u`` under :func:`circle`."""
    top = u.algebra.nilpotency_degree
    total = -u
    power = u
    sign = -1
    for _ in range(2, top):
        power = power * u
        if not power:
            break
        sign = -sign
        total = total + power if sign > 0 else total - power
    return total


def group_commutator(g, h, h_inverse=None):
    """``g^-1 h^-1 g h`` for any group elements with ``*`` and ``inverse()``."""
    hinv = h_inverse if h_inverse is not None else h.inverse()
    return g.inverse() * hinv * g * h


def left_normed_commutator(elements: Sequence):
    out = elements[0]
    for e in elements[1:]:
        out = group_commutator(out, e)
    return out


def group_engel_word(u: AlgebraElement, v: AlgebraElement, n: int) -> UnitalElement:
    """``((1+u), (1+v), ..., (1+v))`` with ``1+v`` repeated ``n`` times."""
    if n < 1:
        raise ValueError("Engel word length must be at least 1")
    u, v = u._unify(v)
    g = UnitalElement.from_part(u)
    h = UnitalElement.from_part(v)
    hinv = h.inverse()
    out = g
    for _ in range(n):
        out = group_commutator(out, h, hinv)
    return out


def engel_sequence(u: AlgebraElement, v: AlgebraElement, n: int) -> List[UnitalElement]:
    """The words ``((1+u), _k (1+v))`` for ``k = 1..n``."""
    g = UnitalElement.from_part(u)
    h = UnitalElement.from_part(v)
    hinv = h.inverse()
    out, seq = g, []
    for _ in range(n):
        out = group_commutator(out, h, hinv)
        seq.append(out)
    return seq


# ---------------------------------------------------------------------------
# filtered identities


@dataclass
class FilteredIdentity:
    """``left == right`` modulo ``B^k``."""
    label: str
    left: UnitalElement
    right: UnitalElement
    k: int

    @property
    def remainder(self) -> AlgebraElement:
        return self.left.part - self.right.part

    def holds(self) -> bool:
        if self.left.constant != self.right.constant:
            return False
        return not components_below(self.remainder, self.k)

    def __str__(self):
        return f"{self.label}: {self.left} = {self.right} + w, w in B^{self.k}"


def commutator_chain(alg: QuotientAlgebra) -> List[FilteredIdentity]:
    """The expansions of ``((1+a), _k (1+b))`` for ``k = 1..5``."""
    a, b = alg.gen("x"), alg.gen("y")
    seq = engel_sequence(a, b, 5)
    ab = [engel_bracket(a, b, k) for k in range(1, 6)]
    e = alg.element

    def unit(part):
        return UnitalElement.from_part(part)

    rhs = [
        unit(ab[0] + e("x*y*x") + e("y^2*x") - e("y*x*y")),
        unit(ab[1] + e("x*y*x*y") - e("y*x*y*x") - (b * ab[1]).scale(2)),
        unit(ab[2] + e("x*y*x*y^2") - e("2*y*x*y*x*y") + e("y^2*x*y*x") - (b * ab[2]).scale(3)),
        unit(ab[3] - e("3*y*x*y*x*y^2") + e("3*y^2*x*y*x*y") - (b * ab[3]).scale(4)),
        unit(ab[4] + e("6*y^2*x*y*x*y^2") - (b * ab[4]).scale(5)),
    ]
    out = [FilteredIdentity(f"((1+x), _{k + 1} (1+y))", seq[k], rhs[k], k + 4) for k in range(5)]
    return out


def commutator1_identity(u: AlgebraElement, v: AlgebraElement) -> FilteredIdentity:
    """``((1+u),(1+v)) = 1 + [u,v] - u^2 v + uvu + v^2 u - vuv`` modulo ``B^4``."""
    left = group_commutator(UnitalElement.from_part(u), UnitalElement.from_part(v))
    right = UnitalElement.from_part(lie_bracket(u, v) - u * u * v + u * v * u + v * v * u - v * u * v)
    return FilteredIdentity("((1+u),(1+v))", left, right, 4)


def commutator2_identity(u: AlgebraElement, k: int) -> FilteredIdentity:
    """For ``u`` in ``B^k``, ``k >= 2``: ``((1+u),(1+y)) = 1 + [u,y] - y[u,y]`` modulo ``B^(k+3)``.

    For ``k = 1`` the term ``u^2 y`` is not absorbed by ``B^4``.
    """
    if k < 2:
        raise ValueError("the expansion needs u in B^k with k >= 2")
    b = u.algebra.gen("y")
    u, b = u._unify(b)
    left = group_commutator(UnitalElement.from_part(u), UnitalElement.from_part(b))
    br = lie_bracket(u, b)
    right = UnitalElement.from_part(br - b * br)
    return FilteredIdentity(f"((1+u),(1+y)), u in B^{k}", left, right, k + 3)


# ---------------------------------------------------------------------------
# checks


def _status(alg: QuotientAlgebra, ok: bool) -> str:
    if alg.outside_hypotheses:
        return EXPLORATORY
    return PASS if ok else FAIL


def group_engel_check(alg: QuotientAlgebra, n: int, expected: str = PASS) -> Claim:
    """Is ``((1+u), _n (1+v)) = 1`` for generic ``u, v``?"""
    u, v = generic_pair(alg)
    word = group_engel_word(u, v, n)
    ok = word.is_one()
    witness = None
    if not ok:
        base = alg.field

        def confirm(vals):
            su, sv = _split(vals, alg, base)
            return not group_engel_word(su, sv, n).is_one()

        values = find_specialization(word.part, confirm)
        if values is None:
            witness = {"generic_value": str(word.part)}
        else:
            su, sv = _split({k: base.convert(x) for k, x in values.items()}, alg, base)
            witness = witness_dict(su, sv, group_engel_word(su, sv, n))
    claim = Claim(
        id=f"group.engel-{n}.char{alg.characteristic}",
        statement=f"the adjoint group of B is {n}-Engel over {alg.field}",
        anchor="adjoint group of B is not 5-Engel" if n <= 5 else "adjoint group is 6-Engel",
        status=_status(alg, ok),
        expected=EXPLORATORY if alg.outside_hypotheses else expected,
        witness=witness,
    )
    return claim


def generic_left_normed(alg: QuotientAlgebra, weight: int) -> UnitalElement:
    """Left-normed commutator of ``weight`` independent generic hull units."""
    prefixes = [f"g{i + 1}" for i in range(weight)]
    ring = generic_ring(alg, prefixes)
    units = [UnitalElement.from_part(generic_element(alg, p, ring)) for p in prefixes]
    return left_normed_commutator(units)


@dataclass
class NilpotencyResult:
    nilpotency_class: int
    lower_witness: Optional[dict]
    weight_class_nonzero: bool
    next_weight_trivial: bool


def group_nilpotency(alg: QuotientAlgebra) -> NilpotencyResult:
    """Nilpotency class of ``1 + B``.

    ``(1 + B^i, 1 + B^j)`` lies in ``1 + B^(i+j)``, so every commutator of
    weight ``c = nilpotency_degree`` is trivial and the class is at most
    ``c - 1``. The generic commutators of weight ``c - 1`` and ``c`` are
    evaluated directly; the class is the largest weight whose generic
    commutator is nontrivial.
    """
    top = alg.nilpotency_degree
    trivial_top = generic_left_normed(alg, top).is_one()
    cls = None
    lower = None
    for weight in range(top - 1, 0, -1):
        comm = generic_left_normed(alg, weight)
        if not comm.is_one():
            cls = weight
            lower = _nilpotency_witness(alg, weight, comm)
            break
    if cls is None:
        cls = 0
    return NilpotencyResult(cls, lower, cls == top - 1, trivial_top)


def _nilpotency_witness(alg: QuotientAlgebra, weight: int, comm: UnitalElement) -> dict:
    base = alg.field
    dim = alg.dim

    def concrete(vals):
        elems = []
        for w in range(weight):
            coeffs = [base.convert(vals.get(w * dim + i, 0)) for i in range(dim)]
            elems.append(UnitalElement.from_part(AlgebraElement._raw(alg, coeffs, base)))
        return elems

    def confirm(vals):
        return not left_normed_commutator(concrete(vals)).is_one()

    values = find_specialization(comm.part, confirm)
    if values is None:
        return {"generic_value": str(comm.part)}
    elems = concrete({k: base.convert(x) for k, x in values.items()})
    return {
        "elements": [str(e) for e in elems],
        "value": str(left_normed_commutator(elems)),
    }


def filtration_check(alg: QuotientAlgebra, i: int, j: int) -> bool:
    """Generic ``(1 + B^i, 1 + B^j)`` lands in ``1 + B^(i+j)``."""
    if i < 1 or j < 1:
        raise ValueError("filtration degrees start at 1")
    ring = generic_ring(alg, ("u", "v"))
    u = generic_element(alg, "u", ring, min_degree=i)
    v = generic_element(alg, "v", ring, min_degree=j)
    comm = group_commutator(UnitalElement.from_part(u), UnitalElement.from_part(v))
    return comm.constant == ring.one and in_power(comm.part, i + j)


def char_scan(spec, primes: Sequence[int] = (2, 3, 5, 7)) -> List[dict]:
    """Evaluate ``((1+x), _5 (1+y))`` and ``6 y^2 x y x y^2`` in each characteristic."""
    from .quotient import build_quotient
    rows = []
    for p in primes:
        alg = build_quotient(spec, characteristic=p)
        a, b = alg.gen("x"), alg.gen("y")
        word = group_engel_word(a, b, 5)
        target = alg.element("6*y^2*x*y*x*y^2")
        rows.append({
            "characteristic": p,
            "engel5_part": str(word.part),
            "target": str(target),
            "matches_target": word.part == target,
            "witness_zero": not word.part,
            "outside_hypotheses": alg.outside_hypotheses,
        })
    return rows
