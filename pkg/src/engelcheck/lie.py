"""Engel identities and the lower central series of the Lie algebra [B]."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .freealg import engel_bracket, lie_bracket
from .linalg import EchelonSpace
from .quotient import AlgebraElement, QuotientAlgebra
from .report import EXPLORATORY, FAIL, PASS, Claim
from .scalars import PolynomialRing, WeightedVariableSet

SPECIALIZATION_VALUES = (1, -1, 2, -2, 3, -3, 4, -4)


# ---------------------------------------------------------------------------
# generic elements


def generic_ring(alg: QuotientAlgebra, prefixes: Sequence[str] = ("u", "v")) -> PolynomialRing:
    """Polynomial ring with one indeterminate per basis coordinate and prefix.

    The indeterminate ``{prefix}_{i}`` has the weight of basis word ``i - 1``.
    """
    names, weights = [], []
    for p in prefixes:
        for i, d in enumerate(alg.degrees):
            names.append(f"{p}_{i + 1}")
            weights.append(d)
    return PolynomialRing(alg.field, WeightedVariableSet(tuple(names), tuple(weights)))


def generic_element(alg: QuotientAlgebra, prefix: str, ring: Optional[PolynomialRing] = None,
                    min_degree: int = 1, max_degree: Optional[int] = None) -> AlgebraElement:
    """Element whose coordinate on basis word ``i`` is the indeterminate ``prefix_{i+1}``.

    Coordinates on basis words outside ``[min_degree, max_degree]`` are zero.
    """
    ring = ring or generic_ring(alg, (prefix,))
    top = max_degree if max_degree is not None else alg.nilpotency_degree
    coeffs = []
    for i, d in enumerate(alg.degrees):
        if min_degree <= d <= top:
            coeffs.append(ring.gen(f"{prefix}_{i + 1}"))
        else:
            coeffs.append(ring.zero)
    return AlgebraElement._raw(alg, coeffs, ring)


def generic_pair(alg: QuotientAlgebra, prefixes=("u", "v")) -> Tuple[AlgebraElement, AlgebraElement]:
    ring = generic_ring(alg, prefixes)
    return tuple(generic_element(alg, p, ring) for p in prefixes)


# ---------------------------------------------------------------------------
# specialization and witnesses


def specialize(u: AlgebraElement, values: Dict[int, object]) -> AlgebraElement:
    """Substitute field values for the indeterminates of a generic element."""
    base = u.domain.base
    coeffs = [base.convert(c.evaluate(values)) for c in u.coeffs]
    return AlgebraElement._raw(u.algebra, coeffs, base)


def _leading_support(vec: AlgebraElement) -> Tuple[int, ...]:
    """Variables of the monomial with the fewest distinct indeterminates."""
    best = None
    for c in vec.coeffs:
        for m in c.terms:
            key = (len(set(m)), tuple(sorted(set(m))))
            if best is None or key < best:
                best = key
    return best[1] if best else ()


def find_specialization(vec: AlgebraElement,
                        confirm: Callable[[Dict[int, object]], bool]) -> Optional[Dict[int, object]]:
    """Small-integer assignment making a nonzero generic vector nonzero.

    Indeterminates outside the support of a minimal monomial are set to 0.
    The support indeterminates start at 1 and are then adjusted one at a
    time through ``SPECIALIZATION_VALUES``; ``confirm`` recomputes the
    specialized value independently.
    """
    base = vec.domain.base
    support = _leading_support(vec)
    if not support:
        return None

    def nonzero(values):
        vals = {k: base.convert(v) for k, v in values.items()}
        return any(c.evaluate(vals) for c in vec.coeffs) and confirm(vals)

    values = {i: 1 for i in support}
    if nonzero(values):
        return values
    for i in support:
        for val in SPECIALIZATION_VALUES:
            trial = dict(values)
            trial[i] = val
            if nonzero(trial):
                return trial
    for combo in itertools.product(SPECIALIZATION_VALUES, repeat=len(support)):
        trial = dict(zip(support, combo))
        if nonzero(trial):
            return trial
    return None


def coordinates(u: AlgebraElement) -> List[List[str]]:
    """Nonzero coordinates as ``[basis word, coefficient]`` pairs."""
    alg = u.algebra
    return [[alg.render_word(alg.basis[i]), str(c)] for i, c in enumerate(u.coeffs) if c]


def witness_dict(u: AlgebraElement, v: AlgebraElement, value, **extra) -> dict:
    out = {"u": coordinates(u), "v": coordinates(v), "u_text": str(u), "v_text": str(v),
           "value": str(value)}
    out.update({k: str(val) for k, val in extra.items()})
    return out


def _split(values: Dict[int, object], alg: QuotientAlgebra, base) -> Tuple[AlgebraElement, AlgebraElement]:
    """Turn an assignment on the (u, v) ring into a pair of concrete elements."""
    dim = alg.dim
    u = [base.zero] * dim
    v = [base.zero] * dim
    for k, val in values.items():
        if k < dim:
            u[k] = base.convert(val)
        else:
            v[k - dim] = base.convert(val)
    return AlgebraElement._raw(alg, u, base), AlgebraElement._raw(alg, v, base)


# ---------------------------------------------------------------------------
# Engel checks


def _status(alg: QuotientAlgebra, ok: bool) -> str:
    if alg.outside_hypotheses:
        return EXPLORATORY
    return PASS if ok else FAIL


def lie_engel_check(alg: QuotientAlgebra, n: int, strategy: str = "symbolic",
                    expected: str = PASS) -> Claim:
    """Does ``[u, v, ..., v]`` (``v`` repeated ``n`` times) vanish identically?"""
    if strategy == "symbolic":
        ok, witness = _symbolic_engel(alg, n)
    elif strategy == "symmetrized":
        ok, witness = _symmetrized_engel(alg, n)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    char = alg.characteristic
    claim = Claim(
        id=f"lie.engel-{n}.{strategy}.char{char}",
        statement=f"[B] is {n}-Engel over {alg.field} ({strategy} strategy)",
        anchor="Lie algebra of B is 5-Engel but not 4-Engel",
        status=_status(alg, ok),
        expected=EXPLORATORY if alg.outside_hypotheses else expected,
        witness=witness,
    )
    if alg.outside_hypotheses:
        claim.details.append(f"outside the supported characteristics; observed {'PASS' if ok else 'FAIL'}")
    return claim


def _symbolic_engel(alg: QuotientAlgebra, n: int):
    u, v = generic_pair(alg)
    result = engel_bracket(u, v, n)
    if not result:
        return True, None
    base = alg.field

    def confirm(vals):
        su, sv = _split(vals, alg, base)
        return bool(engel_bracket(su, sv, n))

    values = find_specialization(result, confirm)
    if values is None:
        return False, {"generic_value": str(result)}
    su, sv = _split({k: base.convert(x) for k, x in values.items()}, alg, base)
    return False, witness_dict(su, sv, engel_bracket(su, sv, n))


# -- symmetrized strategy: sparse vectors straight off the structure table --


def _bracket_basis(alg: QuotientAlgebra, vec: Dict[int, object], i: int) -> Dict[int, object]:
    """``[vec, e_i]`` for a sparse coordinate dict."""
    out: Dict[int, object] = {}
    table = alg.table
    for k, c in vec.items():
        for m, s in table[k][i]:
            out[m] = out.get(m, 0) + c * s
        for m, s in table[i][k]:
            out[m] = out.get(m, 0) - c * s
    return {m: c for m, c in out.items() if c}


def is_graded(alg: QuotientAlgebra) -> bool:
    deg = alg.degrees
    return all(deg[k] == deg[i] + deg[j]
               for i in range(alg.dim) for j in range(alg.dim) for k, _ in alg.table[i][j])


def _arrangement_sum(alg: QuotientAlgebra, j: int, counts: Dict[int, int]) -> Dict[int, object]:
    """Sum of ``[e_j, e_s1, ..., e_sn]`` over distinct arrangements of a multiset."""
    total: Dict[int, object] = {}

    def walk(vec, remaining):
        if not vec:
            return
        if not any(remaining.values()):
            for m, c in vec.items():
                total[m] = total.get(m, 0) + c
            return
        for i in sorted(remaining):
            if remaining[i]:
                remaining[i] -= 1
                walk(_bracket_basis(alg, vec, i), remaining)
                remaining[i] += 1

    walk({j: alg.field.one}, dict(counts))
    return {m: c for m, c in total.items() if c}


def multisets(alg: QuotientAlgebra, n: int, budget: Optional[int]):
    """Multisets of ``n`` basis indices, pruned by degree ``budget`` if given."""
    if budget is None:
        yield from itertools.combinations_with_replacement(range(alg.dim), n)
        return
    deg = alg.degrees

    def rec(start, left, room, acc):
        if left == 0:
            yield tuple(acc)
            return
        for i in range(start, alg.dim):
            # remaining picks need at least deg[i] each (indices sorted by degree)
            if deg[i] * left > room:
                break
            acc.append(i)
            yield from rec(i, left - 1, room - deg[i], acc)
            acc.pop()

    yield from rec(0, n, budget, [])


def symmetrized_components(alg: QuotientAlgebra, n: int):
    """Yield ``(j, multiset, value)`` for every nonzero multihomogeneous component."""
    graded = is_graded(alg)
    top = alg.nilpotency_degree - 1
    for j in range(alg.dim):
        budget = top - alg.degrees[j] if graded else None
        if budget is not None and budget < n:
            continue
        for ms in multisets(alg, n, budget):
            counts: Dict[int, int] = {}
            for i in ms:
                counts[i] = counts.get(i, 0) + 1
            value = _arrangement_sum(alg, j, counts)
            if value:
                yield j, ms, value


def _symmetrized_engel(alg: QuotientAlgebra, n: int):
    failing = list(symmetrized_components(alg, n))
    if not failing:
        return True, None
    # simplest witness: fewest distinct basis elements in the multiset
    j, ms, value = min(failing, key=lambda f: (len(set(f[1])), f[1], f[0]))
    witness = _symmetrized_witness(alg, n, j, ms, value)
    witness["failing_components"] = str(len(failing))
    return False, witness


def _plain_bracket_power(alg: QuotientAlgebra, u: Dict[int, object], v: Dict[int, object], n: int):
    out = dict(u)
    for _ in range(n):
        nxt: Dict[int, object] = {}
        for i, c in v.items():
            for m, s in _bracket_basis(alg, out, i).items():
                nxt[m] = nxt.get(m, 0) + c * s
        out = {m: s for m, s in nxt.items() if s}
    return out


def _symmetrized_witness(alg, n, j, ms, value) -> dict:
    base = alg.field
    idx = sorted(set(ms))
    u = {j: base.one}
    for combo in itertools.chain([(1,) * len(idx)],
                                 itertools.product(SPECIALIZATION_VALUES, repeat=len(idx))):
        v = {i: base.convert(t) for i, t in zip(idx, combo)}
        res = _plain_bracket_power(alg, u, v, n)
        if res:
            ue = AlgebraElement(alg, [u.get(i, 0) for i in range(alg.dim)])
            ve = AlgebraElement(alg, [v.get(i, 0) for i in range(alg.dim)])
            re = AlgebraElement(alg, [res.get(i, 0) for i in range(alg.dim)])
            return witness_dict(ue, ve, re)
    words = [alg.render_word(alg.basis[i]) for i in ms]
    comp = AlgebraElement(alg, [value.get(i, 0) for i in range(alg.dim)])
    return {"component": f"[{alg.render_word(alg.basis[j])}; {', '.join(words)}]",
            "value": str(comp)}


# ---------------------------------------------------------------------------
# the twenty multihomogeneous components of [u, v, v, v, v, v]

LOW_DEGREE_WORDS = ("x", "y", "x*y", "y*x", "y^2")
LOW_DEGREE_NAMES = ("alpha", "beta", "gamma", "delta", "mu")

# (exponents on the first element's indeterminates, on the second's)
F_LABELS: Tuple[str, ...] = (
    "alpha1*beta2^5",
    "alpha1*alpha2*beta2^4",
    "alpha1*beta2^4*gamma2",
    "alpha1*beta2^4*delta2",
    "alpha1*beta2^4*mu2",
    "alpha1*alpha2*beta2^3*mu2",
    "beta1*alpha2*beta2^4",
    "beta1*alpha2^2*beta2^3",
    "beta1*beta2^4*gamma2",
    "beta1*alpha2*beta2^3*gamma2",
    "beta1*beta2^4*delta2",
    "beta1*alpha2*beta2^3*delta2",
    "beta1*alpha2*beta2^3*mu2",
    "beta1*alpha2^2*beta2^2*mu2",
    "gamma1*beta2^5",
    "gamma1*alpha2*beta2^4",
    "delta1*beta2^5",
    "delta1*alpha2*beta2^4",
    "mu1*alpha2*beta2^4",
    "mu1*alpha2^2*beta2^3",
)

# components that vanish because every word of x-degree 1 and y-degree
# 5 or 6 is zero
DEGREE_RULE_ZERO = (0, 4, 6, 8, 10, 12, 14, 16, 18)


@dataclass
class FComponents:
    algebra: QuotientAlgebra
    components: Dict[str, AlgebraElement]
    labels: Dict[str, str]
    unexpected: Dict[str, AlgebraElement] = field(default_factory=dict)

    def __getitem__(self, key) -> AlgebraElement:
        if isinstance(key, int):
            key = f"f{key}"
        return self.components[key]

    def nonzero(self) -> List[str]:
        return [k for k, v in self.components.items() if v]


def _low_ring(alg: QuotientAlgebra) -> PolynomialRing:
    names, weights = [], []
    for suffix in ("1", "2"):
        for name, word in zip(LOW_DEGREE_NAMES, LOW_DEGREE_WORDS):
            names.append(name + suffix)
            weights.append(word.count("x") + word.count("y") + word.count("^2"))
    return PolynomialRing(alg.field, WeightedVariableSet(tuple(names), tuple(weights)))


def _parse_label(label: str, vars: WeightedVariableSet):
    exps = {}
    for part in label.split("*"):
        name, _, e = part.partition("^")
        exps[name] = int(e or 1)
    return vars.monomial(exps)


def f_decomposition(alg: QuotientAlgebra) -> FComponents:
    """Split ``[u, v, v, v, v, v]`` for ``u, v`` in the span of the low-degree words.

    ``u`` and ``v`` range over combinations of x, y, xy, yx, y^2 with
    coefficients alpha1..mu1 and alpha2..mu2; the result is grouped by
    monomial in those coefficients.
    """
    ring = _low_ring(alg)
    images = [alg.element(w).over(ring) for w in LOW_DEGREE_WORDS]
    u = sum((img.scale(ring.gen(n + "1")) for img, n in zip(images, LOW_DEGREE_NAMES)), alg.zero(ring))
    v = sum((img.scale(ring.gen(n + "2")) for img, n in zip(images, LOW_DEGREE_NAMES)), alg.zero(ring))
    result = engel_bracket(u, v, 5)
    collected: Dict[tuple, List] = {}
    for k, c in enumerate(result.coeffs):
        for m, s in c.terms.items():
            collected.setdefault(m, [alg.field.zero] * alg.dim)[k] = s
    known = {_parse_label(lab, ring.vars): i for i, lab in enumerate(F_LABELS)}
    components = {f"f{i}": alg.zero() for i in range(len(F_LABELS))}
    unexpected = {}
    for m, vec in collected.items():
        elem = AlgebraElement(alg, vec)
        if m in known:
            components[f"f{known[m]}"] = elem
        else:
            unexpected[ring.vars.render_monomial(m)] = elem
    labels = {f"f{i}": lab for i, lab in enumerate(F_LABELS)}
    return FComponents(alg, components, labels, unexpected)


def arrangement_sum(alg: QuotientAlgebra, first: str, rest: Sequence[str]) -> AlgebraElement:
    """Sum of ``[first, w_1, ..., w_n]`` over distinct orderings of ``rest``."""
    firsts = alg.element(first)
    elems = [alg.element(t) for t in rest]
    total = alg.zero()
    seen = set()
    for perm in itertools.permutations(range(len(rest))):
        key = tuple(rest[i] for i in perm)
        if key in seen:
            continue
        seen.add(key)
        out = firsts
        for i in perm:
            out = lie_bracket(out, elems[i])
        total = total + out
    return total


# ---------------------------------------------------------------------------
# lower central series


def lie_lower_central_series(alg: QuotientAlgebra) -> Tuple[List[int], int]:
    """Dimensions of ``L_1 = B, L_{k+1} = [L_k, B]`` and the nilpotency class."""
    field_ = alg.field
    current = [{i: field_.one} for i in range(alg.dim)]
    dims = [alg.dim]
    while current:
        space = EchelonSpace(field_)
        for vec in current:
            for i in range(alg.dim):
                br = _bracket_basis(alg, vec, i)
                if br:
                    space.add(br)
        current = list(space.rows.values())
        if current:
            dims.append(len(current))
        if len(dims) > alg.dim + 1:
            raise RuntimeError("Lie algebra is not nilpotent")
    return dims, len(dims)


def lie_series_space(alg: QuotientAlgebra, k: int) -> List[AlgebraElement]:
    """A basis of the ``k``-th term of the lower central series."""
    field_ = alg.field
    current = [{i: field_.one} for i in range(alg.dim)]
    for _ in range(k - 1):
        space = EchelonSpace(field_)
        for vec in current:
            for i in range(alg.dim):
                br = _bracket_basis(alg, vec, i)
                if br:
                    space.add(br)
        current = list(space.rows.values())
    return [AlgebraElement(alg, [v.get(i, 0) for i in range(alg.dim)]) for v in current]
