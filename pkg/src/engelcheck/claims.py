"""The default verification catalog.

Each catalog entry is a function ``Context -> Claim`` registered under a
claim id. Expected outcomes (some claims are asserted negatives, e.g. the
adjoint group failing the 5-Engel identity) live in ``data/claims.yaml``,
which also fixes the report order.
"""

from __future__ import annotations

import functools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import yaml

from .bch import bch_product, exp_unital, log_unital, phi, star_engel_check, star_engel_word
from .freealg import FreePolynomial, Word, engel_bracket, engel_closed_form, left_normed, lie_bracket, subwords
from .group import (UnitalElement, char_scan, circle, commutator1_identity, commutator2_identity,
                    commutator_chain, filtration_check, group_engel_check, group_engel_word,
                    group_nilpotency, quasi_inverse)
from .lie import (DEGREE_RULE_ZERO, f_decomposition, generic_element, generic_pair,
                  lie_engel_check, lie_lower_central_series)
from .linalg import rank
from .parse import parse_poly, parse_presentation, render_poly, render_presentation
from .presentation import PresentationSpec, enumerate_survivors, verify_monomial_memberships
from .quotient import (AlgebraElement, QuotientAlgebra, build_quotient, components_below,
                       graded_component, normal_form)
from .report import EXPLORATORY, FAIL, PASS, Claim, VerificationReport

DATA = Path(__file__).with_name("data")
DEFAULT_SPEC = DATA / "counterexample.yaml"
DEFAULT_CATALOG = DATA / "claims.yaml"


@dataclass(frozen=True)
class Context:
    spec: PresentationSpec
    seed: int = 0

    def algebra(self, characteristic: Optional[int] = None) -> QuotientAlgebra:
        return _algebra(self.spec, characteristic)

    def monomial_algebra(self) -> QuotientAlgebra:
        return _algebra(self.spec.monomial_part(), None)

    def rng(self, claim_id: str) -> random.Random:
        # string seeds are hashed deterministically, independent of run order
        return random.Random(f"{self.seed}:{claim_id}")


@functools.lru_cache(maxsize=None)
def _algebra(spec: PresentationSpec, characteristic: Optional[int]) -> QuotientAlgebra:
    return build_quotient(spec, characteristic)


@functools.lru_cache(maxsize=None)
def _memo(kind: str, spec: PresentationSpec, *args):
    alg = _algebra(spec, None)
    if kind == "group-engel":
        return group_engel_check(alg, *args)
    if kind == "star-engel":
        return star_engel_check(alg, *args)
    if kind == "lie-engel":
        return lie_engel_check(_algebra(spec, args[1]), args[0], args[2])
    if kind == "monomial":
        return {c.id: c for c in verify_monomial_memberships(spec)}
    raise KeyError(kind)


ClaimFn = Callable[[Context], Claim]
REGISTRY: Dict[str, ClaimFn] = {}


def register(claim_id: str):
    def deco(fn):
        if claim_id in REGISTRY:
            raise ValueError(f"claim {claim_id!r} registered twice")
        REGISTRY[claim_id] = fn
        return fn
    return deco


def _verdict(claim_id: str, statement: str, anchor: str, problems: dict, details=()) -> Claim:
    """PASS when ``problems`` is empty, otherwise FAIL carrying it as witness."""
    return Claim(claim_id, statement, anchor, FAIL if problems else PASS,
                 witness=dict(problems) if problems else None, details=list(details))


def _words(alg: QuotientAlgebra, ws) -> List[str]:
    return [alg.render_word(w) for w in ws]


def _random_element(alg: QuotientAlgebra, rng: random.Random, density: float = 0.4) -> AlgebraElement:
    coeffs = [rng.randint(-3, 3) if rng.random() < density else 0 for _ in range(alg.dim)]
    return AlgebraElement(alg, coeffs)


def _random_free(spec: PresentationSpec, rng: random.Random, terms: int = 4, max_len: int = 5) -> FreePolynomial:
    n = len(spec.generators)
    out: Dict[Word, int] = {}
    for _ in range(terms):
        w = Word(rng.randrange(n) for _ in range(rng.randint(1, max_len)))
        out[w] = out.get(w, 0) + rng.choice((-3, -2, -1, 1, 2, 3))
    return FreePolynomial(out, spec.generators)


# ---------------------------------------------------------------------------
# 1. basis and dimension

BASIS_ANCHOR = "bases of the graded pieces of C and B"


@register("basis.survivor-counts")
def _survivor_counts(ctx):
    spec = ctx.spec
    by_deg = enumerate_survivors(spec, by_degree=True)
    counts = tuple(len(by_deg.get(d, ())) for d in range(1, max(by_deg) + 1))
    # independent oracle: distinct contiguous subwords of the two kept degree-7 words
    tops = [spec.word("y*x*y^3*x*y"), spec.word("y^2*x*y*x*y^2")]
    oracle_words = set().union(*(subwords(t) for t in tops))
    oracle = tuple(sum(1 for w in oracle_words if len(w) == d) for d in range(1, 8))
    problems = {}
    if counts != (2, 3, 5, 6, 6, 4, 2):
        problems["counts"] = list(counts)
    if oracle != counts or oracle_words != {w for ws in by_deg.values() for w in ws}:
        problems["subword_oracle"] = list(oracle)
    return _verdict("basis.survivor-counts", "surviving words per degree are (2, 3, 5, 6, 6, 4, 2)",
                    BASIS_ANCHOR, problems, [f"counts: {counts}", f"total: {sum(counts)}"])


@register("basis.survivor-sets")
def _survivor_sets(ctx):
    spec = ctx.spec
    by_deg = enumerate_survivors(spec, by_degree=True)
    want6 = {spec.word(t) for t in ("x*y^3*x*y", "y*x*y*x*y^2", "y*x*y^3*x", "y^2*x*y*x*y")}
    want7 = {spec.word(t) for t in ("y*x*y^3*x*y", "y^2*x*y*x*y^2")}
    problems = {}
    if set(by_deg.get(6, ())) != want6:
        problems["degree6"] = [spec.render_word(w) for w in by_deg.get(6, ())]
    if set(by_deg.get(7, ())) != want7:
        problems["degree7"] = [spec.render_word(w) for w in by_deg.get(7, ())]
    return _verdict("basis.survivor-sets", "degree-6 and degree-7 surviving words are as listed",
                    BASIS_ANCHOR, problems)


@register("basis.ideal-dim")
def _ideal_dim(ctx):
    alg = ctx.algebra()
    return _verdict("basis.ideal-dim", "the images of h1 and h2 span I/I0 (dimension 2)",
                    "ideal generated by h1 and h2", {} if alg.ideal_dim == 2 else {"ideal_dim": alg.ideal_dim},
                    [f"ideal_dim: {alg.ideal_dim}"])


def two_sided_span_rank(spec: PresentationSpec) -> int:
    """Rank of span{m1 h m2} in C, with m1, m2 words or empty, computed directly.

    This enumerates all two-sided multiples at once, instead of the
    generator-by-generator closure used to build the quotient.
    """
    survivors = set(enumerate_survivors(spec))
    field = spec.field
    multipliers: List[Tuple[int, ...]] = [()] + [tuple(w) for w in survivors]
    vectors = []
    for clause in spec.polynomial_clauses():
        terms = clause.polynomial.terms
        for m1 in multipliers:
            for m2 in multipliers:
                vec = {}
                for w, c in terms.items():
                    nw = Word(m1 + tuple(w) + m2)
                    if nw in survivors:
                        vec[nw] = vec.get(nw, 0) + field.convert(c)
                vec = {k: v for k, v in vec.items() if v}
                if vec:
                    vectors.append(vec)
    return rank(vectors, field)


@register("basis.dimension")
def _dimension(ctx):
    alg = ctx.algebra()
    dims = alg.graded_dims()
    oracle = len(alg.survivors) - two_sided_span_rank(ctx.spec)
    problems = {}
    if alg.dim != 26 or dims != (2, 3, 5, 6, 6, 3, 1):
        problems["graded_dims"] = list(dims)
    if oracle != alg.dim:
        problems["rank_oracle_dim"] = oracle
    return _verdict("basis.dimension", "dim B = 26 with graded dimensions (2, 3, 5, 6, 6, 3, 1)",
                    BASIS_ANCHOR, problems, [f"dim: {alg.dim}", f"graded: {dims}", f"rank oracle dim: {oracle}"])


@register("basis.top-degree")
def _top_degree(ctx):
    alg = ctx.algebra()
    top = [alg.basis[i] for i in alg.grading.get(7, ())]
    ok = _words(alg, top) == ["y^2*x*y*x*y^2"]
    return _verdict("basis.top-degree", "B_(7) is spanned by y^2*x*y*x*y^2",
                    "one-dimensional top degree of B", {} if ok else {"degree7_basis": _words(alg, top)})


@register("basis.nilpotency-degree")
def _nilpotency_degree(ctx):
    alg = ctx.algebra()
    n = alg.nilpotency_degree
    # every product of 8 generator images vanishes
    a, b = alg.gen("x"), alg.gen("y")
    nonzero = []
    for bits in range(256):
        prod = None
        for k in range(8):
            g = b if bits >> (7 - k) & 1 else a
            prod = g if prod is None else prod * g
        if prod:
            nonzero.append(bits)
    problems = {}
    if n != 8:
        problems["nilpotency_degree"] = n
    if nonzero:
        problems["nonzero_length8_words"] = nonzero
    return _verdict("basis.nilpotency-degree", "B^8 = 0 and B^7 != 0", "B^8 = 0", problems,
                    [f"nilpotency degree: {n}"])


# ---------------------------------------------------------------------------
# 2. relations

for _cid in ("relations.monomial-members", "relations.x1-y56-vanish",
             "relations.survivors-divide-support", "relations.divisor-clause-generated"):
    register(_cid)(lambda ctx, _cid=_cid: _memo("monomial", ctx.spec)[_cid])


@register("relations.monomial-products")
def _monomial_products(ctx):
    alg = ctx.algebra()
    words = ("x^2", "x*y^2*x", "y^4", "y^2*x*y^2", "x*y*x*y^3", "y^3*x*y*x")
    a, b = alg.gen("x"), alg.gen("y")
    products = {
        "x^2": a * a, "x*y^2*x": a * b * b * a, "y^4": b * b * b * b,
        "y^2*x*y^2": b * b * a * b * b, "x*y*x*y^3": a * b * a * b * b * b, "y^3*x*y*x": b * b * b * a * b * a,
    }
    bad = {w: str(products[w]) for w in words if products[w] or alg.element(w)}
    return _verdict("relations.monomial-products", "a^2 = ab^2a = b^4 = b^2ab^2 = abab^3 = b^3aba = 0 in B",
                    "monomial relations in B", bad)


@register("relations.h-table")
def _h_table(ctx):
    C = ctx.monomial_algebra()
    h1, h2 = (normal_form(c.polynomial, C) for c in ctx.spec.polynomial_clauses())
    x, y = C.gen("x"), C.gen("y")
    table = {
        "x*h1": (x * h1, C.zero()), "h1*x": (h1 * x, C.zero()),
        "y*h1": (y * h1, h2), "-h1*y": (-(h1 * y), h2),
        "x*h2": (x * h2, C.zero()), "h2*x": (h2 * x, C.zero()),
        "y*h2": (y * h2, C.zero()), "h2*y": (h2 * y, C.zero()),
    }
    bad = {k: f"{got} != {want}" for k, (got, want) in table.items() if got != want}
    return _verdict("relations.h-table", "x h1 = h1 x = 0, y h1 = -h1 y = h2, x h2 = h2 x = y h2 = h2 y = 0 modulo I0",
                    "multiplication of h1 and h2 modulo I0", bad)


@register("relations.normal-forms")
def _normal_forms(ctx):
    alg = ctx.algebra()
    spec = ctx.spec
    h1 = spec.polynomial_clauses()[0].polynomial
    got = {
        "h1": (normal_form(h1, alg), alg.zero()),
        "y*x*y^3*x*y": (alg.element("y*x*y^3*x*y"), alg.element("y^2*x*y*x*y^2").scale(Fraction(5, 2))),
        "x^2": (alg.element("x^2"), alg.zero()),
    }
    bad = {k: f"{a} != {b}" for k, (a, b) in got.items() if a != b}
    return _verdict("relations.normal-forms", "h1 -> 0, y*x*y^3*x*y -> 5/2 y^2*x*y*x*y^2, x^2 -> 0",
                    "normal forms modulo I", bad)


# ---------------------------------------------------------------------------
# 3. closed form of the Engel bracket in the free algebra


@register("engel.closed-form")
def _closed_form(ctx):
    gens = ("x", "y")
    X, Y = FreePolynomial.generator("x", gens), FreePolynomial.generator("y", gens)
    bad = {}
    for k in range(1, 8):
        if engel_closed_form(k) != engel_bracket(X, Y, k):
            bad[f"k{k}"] = str(engel_closed_form(k))
    return _verdict("engel.closed-form",
                    "[x, y, ..., y] (k times) = sum_i C(k,i) (-1)^i y^i x y^(k-i) for k = 1..7",
                    "closed form of [x, (k) y]", bad)


# ---------------------------------------------------------------------------
# 4. the components f0..f19

F_ANCHOR = "multihomogeneous components of [u, (5) v]"
F1_IN_C = "-15*y*x*y*x*y^2 + 15*y^2*x*y*x*y - 6*y*x*y^3*x + 6*x*y^3*x*y"


@functools.lru_cache(maxsize=None)
def _fdec(spec: PresentationSpec, monomial_only: bool):
    return f_decomposition(_algebra(spec.monomial_part() if monomial_only else spec, None))


@register("f.degree-rule-zero")
def _f_degree_rule(ctx):
    bad = {}
    for monomial_only in (True, False):
        fc = _fdec(ctx.spec, monomial_only)
        for i in DEGREE_RULE_ZERO:
            if fc[i]:
                bad[f"{'C' if monomial_only else 'B'}.f{i}"] = str(fc[i])
    return _verdict("f.degree-rule-zero", "f0 = f4 = f6 = ... = f18 = 0", F_ANCHOR, bad)


@register("f.f1")
def _f1(ctx):
    C = ctx.monomial_algebra()
    fc = _fdec(ctx.spec, True)
    h1 = normal_form(ctx.spec.polynomial_clauses()[0].polynomial, C)
    bad = {}
    if fc[1] != C.element(F1_IN_C):
        bad["f1"] = str(fc[1])
    if fc[1] != h1.scale(3):
        bad["f1_minus_3h1"] = str(fc[1] - h1.scale(3))
    return _verdict("f.f1", f"in C, f1 = {F1_IN_C} = 3 h1", F_ANCHOR, bad, [f"f1 in C: {fc[1]}"])


@register("f.f7")
def _f7(ctx):
    bad = {}
    for monomial_only in (True, False):
        fc = _fdec(ctx.spec, monomial_only)
        if fc[7] != -fc[1]:
            bad["C" if monomial_only else "B"] = str(fc[7] + fc[1])
    return _verdict("f.f7", "f7 = -f1", F_ANCHOR, bad)


@register("f.vanish-in-B")
def _f_vanish(ctx):
    fc = _fdec(ctx.spec, False)
    bad = {k: str(fc[k]) for k in fc.nonzero()}
    return _verdict("f.vanish-in-B", "all of f0..f19 vanish in B", F_ANCHOR, bad,
                    [f"nonzero in C: {', '.join(_fdec(ctx.spec, True).nonzero())}"])


@register("f.no-extra-monomials")
def _f_extra(ctx):
    bad = {}
    for monomial_only in (True, False):
        fc = _fdec(ctx.spec, monomial_only)
        for k, v in fc.unexpected.items():
            bad[f"{'C' if monomial_only else 'B'}.{k}"] = str(v)
    return _verdict("f.no-extra-monomials", "no coefficient monomials outside the twenty listed ones occur",
                    F_ANCHOR, bad)


# ---------------------------------------------------------------------------
# 5. Lie Engel checks

for _p in (0, 5, 7):
    for _strategy in ("symbolic", "symmetrized"):
        _cid = f"lie.engel-5.{_strategy}.char{_p}"
        register(_cid)(lambda ctx, _p=_p, _s=_strategy: _memo("lie-engel", ctx.spec, 5, _p or None, _s))
register("lie.engel-4.symbolic.char0")(lambda ctx: _memo("lie-engel", ctx.spec, 4, None, "symbolic"))


@register("lie.engel-4.witness")
def _lie4_witness(ctx):
    alg = ctx.algebra()
    a, b = alg.gen("x"), alg.gen("y")
    value = engel_bracket(a, b, 4)
    want = alg.element("-4*y*x*y^3 - 4*y^3*x*y")
    check = _memo("lie-engel", ctx.spec, 4, None, "symbolic")
    bad = {}
    if value != want or not value:
        bad["value"] = str(value)
    w = check.witness or {}
    if (w.get("u_text"), w.get("v_text")) != ("x", "y") or w.get("value") != str(want):
        bad["generic_witness"] = {k: w.get(k) for k in ("u_text", "v_text", "value")}
    return _verdict("lie.engel-4.witness", "[a, (4) b] = -4 bab^3 - 4 b^3ab != 0 and (a, b) is the reported witness",
                    "Lie algebra of B is not 4-Engel", bad, [f"[a, (4) b] = {value}"])


@register("lie.strategy-agreement")
def _agreement(ctx):
    alg = ctx.algebra()
    bad = {}
    rows = []
    for n in (3, 4, 5, 6):
        sym = lie_engel_check(alg, n, "symbolic")
        sy2 = lie_engel_check(alg, n, "symmetrized")
        rows.append(f"n={n}: symbolic {sym.status}, symmetrized {sy2.status}")
        if sym.status != sy2.status:
            bad[f"n{n}"] = [sym.status, sy2.status]
        for c in (sym, sy2):
            w = c.witness
            if c.status == FAIL and not (w and "u_text" in w and
                                         engel_bracket(alg.element(w["u_text"]), alg.element(w["v_text"]), n)):
                bad[f"{c.id}.witness"] = w
    return _verdict("lie.strategy-agreement", "symbolic and symmetrized verdicts agree for n = 3..6 with valid witnesses",
                    "Lie algebra of B is 5-Engel", bad, rows)


@register("lie.intermediate-identities")
def _intermediate(ctx):
    alg = ctx.algebra()
    a, b = alg.gen("x"), alg.gen("y")
    e = alg.element
    ident = {
        "[a,b,a] = 2aba": (left_normed([a, b, a]), e("2*x*y*x")),
        "[aba,b,b,b] = -3babab^2 + 3b^2abab": (left_normed([e("x*y*x"), b, b, b]),
                                               e("-3*y*x*y*x*y^2 + 3*y^2*x*y*x*y")),
        "[a,b,a,b,b,b] = -6babab^2 + 6b^2abab": (left_normed([a, b, a, b, b, b]),
                                                 e("-6*y*x*y*x*y^2 + 6*y^2*x*y*x*y")),
        "[a,b,b,a] = [a,b,a,b]": (left_normed([a, b, b, a]), left_normed([a, b, a, b])),
        "[a,b,b,b,a] = 2ab^3a + 3b^2aba + 3abab^2": (left_normed([a, b, b, b, a]),
                                                     e("2*x*y^3*x + 3*y^2*x*y*x + 3*x*y*x*y^2")),
        "[a,b,b,b,a,b] = 2ab^3ab + 3b^2abab - 2bab^3a - 3babab^2": (
            left_normed([a, b, b, b, a, b]),
            e("2*x*y^3*x*y + 3*y^2*x*y*x*y - 2*y*x*y^3*x - 3*y*x*y*x*y^2")),
        "[a,b,b,b,b,a] = -4bab^3a + 4ab^3ab": (left_normed([a, b, b, b, b, a]),
                                               e("-4*y*x*y^3*x + 4*x*y^3*x*y")),
    }
    bad = {k: f"{lhs} != {rhs}" for k, (lhs, rhs) in ident.items() if lhs != rhs}
    return _verdict("lie.intermediate-identities", "the seven intermediate bracket identities hold exactly",
                    "brackets of a and b", bad)


# ---------------------------------------------------------------------------
# 6. adjoint group


@register("group.commutator-chain")
def _chain(ctx):
    alg = ctx.algebra()
    chain = commutator_chain(alg)
    bad = {}
    for k, ident in enumerate(chain, start=1):
        if not ident.holds():
            bad[f"k{k}"] = str(ident.remainder)
    exact = chain[-1].left == UnitalElement.from_part(alg.element("6*y^2*x*y*x*y^2"))
    if not exact:
        bad["k5_exact"] = str(chain[-1].left)
    return _verdict("group.commutator-chain",
                    "((1+a), (k) (1+b)) matches its expansion modulo B^(k+3) for k = 1..4 and equals 1 + 6 b^2abab^2 at k = 5",
                    "commutator chain of 1+a and 1+b", bad, [str(c) for c in chain])


@register("group.commutator-shapes")
def _shapes(ctx):
    alg = ctx.algebra()
    rng = ctx.rng("group.commutator-shapes")
    bad = {}
    u, v = generic_pair(alg)
    if not commutator1_identity(u, v).holds():
        bad["generic"] = "((1+u),(1+v)) shape fails"
    for t in range(5):
        ru, rv = _random_element(alg, rng), _random_element(alg, rng)
        if not commutator1_identity(ru, rv).holds():
            bad[f"random{t}"] = [str(ru), str(rv)]
    for k in range(2, 6):
        w = generic_element(alg, "w", min_degree=k)
        if not commutator2_identity(w, k).holds():
            bad[f"B^{k}"] = "((1+w),(1+b)) shape fails"
    return _verdict("group.commutator-shapes",
                    "((1+u),(1+v)) = 1 + [u,v] - u^2v + uvu + v^2u - vuv mod B^4, and ((1+w),(1+b)) = 1 + [w,b] - b[w,b] mod B^(k+3) for w in B^k, k >= 2",
                    "general commutator expansions", bad)


register("group.engel-5.char0")(lambda ctx: _memo("group-engel", ctx.spec, 5))
register("group.engel-6.char0")(lambda ctx: _memo("group-engel", ctx.spec, 6))
register("group.engel-7.char0")(lambda ctx: _memo("group-engel", ctx.spec, 7))


@register("group.engel-5.witness")
def _group5_witness(ctx):
    alg = ctx.algebra()
    check = _memo("group-engel", ctx.spec, 5)
    want = UnitalElement.from_part(alg.element("6*y^2*x*y*x*y^2"))
    at_gens = group_engel_word(alg.gen("x"), alg.gen("y"), 5)
    w = check.witness or {}
    bad = {}
    if at_gens != want:
        bad["value_at_generators"] = str(at_gens)
    if (w.get("u_text"), w.get("v_text"), w.get("value")) != ("x", "y", "1 + 6*y^2*x*y*x*y^2"):
        bad["generic_witness"] = {k: w.get(k) for k in ("u_text", "v_text", "value")}
    return _verdict("group.engel-5.witness", "the minimal witness is (a, b) with ((1+a), (5) (1+b)) = 1 + 6 b^2abab^2",
                    "adjoint group of B is not 5-Engel", bad, [f"value: {at_gens}"])


# ---------------------------------------------------------------------------
# 7. nilpotency


@register("nilpotency.lie-class")
def _lie_class(ctx):
    dims, cls = lie_lower_central_series(ctx.algebra())
    return _verdict("nilpotency.lie-class", "the lower central series of [B] has length 7",
                    "nilpotency class of [B]", {} if cls == 7 else {"dims": dims, "class": cls},
                    [f"dims: {dims}"])


@functools.lru_cache(maxsize=None)
def _group_nilpotency(spec):
    return group_nilpotency(_algebra(spec, None))


@register("nilpotency.group-class")
def _group_class(ctx):
    res = _group_nilpotency(ctx.spec)
    problems = {}
    if res.nilpotency_class != 7 or not res.weight_class_nonzero or not res.next_weight_trivial:
        problems = {"class": res.nilpotency_class, "weight8_trivial": res.next_weight_trivial}
    details = [f"class: {res.nilpotency_class}", f"weight-8 generic commutator trivial: {res.next_weight_trivial}"]
    if res.lower_witness:
        details += [f"weight-7 witness: {res.lower_witness.get('elements')}",
                    f"weight-7 value: {res.lower_witness.get('value')}"]
    return _verdict("nilpotency.group-class", "1 + B is nilpotent of class exactly 7",
                    "adjoint group is nilpotent of class 7", problems, details)


@register("nilpotency.class-consistency")
def _class_consistency(ctx):
    _, lie_cls = lie_lower_central_series(ctx.algebra())
    grp = _group_nilpotency(ctx.spec).nilpotency_class
    return _verdict("nilpotency.class-consistency", "group class <= Lie class",
                    "class of the adjoint group is bounded by the Lie class",
                    {} if grp <= lie_cls else {"group": grp, "lie": lie_cls})


# ---------------------------------------------------------------------------
# 8. BCH group

BCH_ANCHOR = "BCH group of [B] and the adjoint group"


@register("bch.homomorphism")
def _bch_hom(ctx):
    alg = ctx.algebra()
    rng = ctx.rng("bch.homomorphism")
    bad = {}
    u, v = generic_pair(alg)
    if bch_product(phi(u), phi(v)) != phi(circle(u, v)):
        bad["generic"] = "phi(u o v) != phi(u) * phi(v)"
    for t in range(5):
        ru, rv = _random_element(alg, rng), _random_element(alg, rng)
        if bch_product(phi(ru), phi(rv)) != phi(circle(ru, rv)):
            bad[f"random{t}"] = [str(ru), str(rv)]
        if log_unital(exp_unital(ru)) != ru:
            bad[f"log-exp{t}"] = str(ru)
    return _verdict("bch.homomorphism", "phi(u) = log(1+u) satisfies phi(u o v) = phi(u) * phi(v)",
                    BCH_ANCHOR, bad)


@register("bch.degree-two")
def _bch_deg2(ctx):
    alg = ctx.algebra()
    u, v = generic_pair(alg)
    diff = bch_product(u, v) - (u + v + lie_bracket(u, v).scale(Fraction(1, 2)))
    low = components_below(diff, 3)
    return _verdict("bch.degree-two", "u * v agrees with u + v + 1/2 [u, v] in degrees <= 2",
                    BCH_ANCHOR, {} if not low else {"difference": str(low)})


@register("bch.group-axioms")
def _bch_axioms(ctx):
    alg = ctx.algebra()
    rng = ctx.rng("bch.group-axioms")
    bad = {}
    for t in range(3):
        u, v, w = (_random_element(alg, rng) for _ in range(3))
        if bch_product(bch_product(u, v), w) != bch_product(u, bch_product(v, w)):
            bad[f"assoc{t}"] = [str(u), str(v), str(w)]
        if bch_product(u, alg.zero()) != u or bch_product(u, -u):
            bad[f"unit{t}"] = str(u)
    return _verdict("bch.group-axioms", "* is associative with identity 0 and inverse -u", BCH_ANCHOR, bad)


register("bch.star-engel-5")(lambda ctx: _memo("star-engel", ctx.spec, 5))
register("bch.star-engel-6")(lambda ctx: _memo("star-engel", ctx.spec, 6))


@register("bch.star-engel-5.value")
def _star5_value(ctx):
    alg = ctx.algebra()
    val = star_engel_word(phi(alg.gen("x")), phi(alg.gen("y")), 5)
    want = alg.element("6*y^2*x*y*x*y^2")
    return _verdict("bch.star-engel-5.value", "(log(1+a), (5) log(1+b)) = 6 b^2abab^2 in the BCH group",
                    BCH_ANCHOR, {} if val.value == want else {"value": str(val)})


@register("bch.transport")
def _transport(ctx):
    alg = ctx.algebra()
    a, b = alg.gen("x"), alg.gen("y")
    bad = {}
    rows = []
    for n in (4, 5, 6):
        star = _memo("star-engel", ctx.spec, n) if n in (5, 6) else star_engel_check(alg, n)
        grp = _memo("group-engel", ctx.spec, n) if n in (5, 6) else group_engel_check(alg, n)
        rows.append(f"n={n}: group {grp.status}, star {star.status}")
        if star.status != grp.status:
            bad[f"n{n}"] = [grp.status, star.status]
        if star_engel_word(phi(a), phi(b), n).value != log_unital(group_engel_word(a, b, n)):
            bad[f"n{n}.value"] = "phi does not carry the group value"
    return _verdict("bch.transport", "BCH-group Engel verdicts coincide with adjoint-group verdicts for n = 4, 5, 6",
                    BCH_ANCHOR, bad, rows)


@register("bch.converse-fails")
def _converse(ctx):
    lie = _memo("lie-engel", ctx.spec, 5, None, "symbolic")
    star = _memo("star-engel", ctx.spec, 5)
    ok = lie.status == PASS and star.status == FAIL
    return _verdict("bch.converse-fails", "[B] is 5-Engel while its BCH group is not",
                    "the converse of the group-to-Lie Engel transfer fails",
                    {} if ok else {"lie": lie.status, "star": star.status})


# ---------------------------------------------------------------------------
# 9. characteristic scan


@register("charscan.witness")
def _charscan(ctx):
    rows = char_scan(ctx.spec, (2, 3, 5, 7))
    bad = {}
    for r in rows:
        p = r["characteristic"]
        if r["witness_zero"] != (p in (2, 3)) or not r["matches_target"]:
            bad[f"char{p}"] = r["engel5_part"]
    return _verdict("charscan.witness", "6 b^2abab^2 vanishes over F_2, F_3 and not over F_5, F_7",
                    "the witness needs 6 != 0", bad,
                    [f"char {r['characteristic']}: {r['engel5_part'] or '0'}" for r in rows])


for _p in (2, 3):
    register(f"lie.engel-5.symbolic.char{_p}")(
        lambda ctx, _p=_p: _memo("lie-engel", ctx.spec, 5, _p, "symbolic"))
    register(f"group.engel-5.char{_p}")(
        lambda ctx, _p=_p: group_engel_check(ctx.algebra(_p), 5))


# ---------------------------------------------------------------------------
# 10. engine properties (randomized, seeded)

ENGINE_ANCHOR = "engine invariants"


@register("engine.normal-form")
def _engine_nf(ctx):
    alg = ctx.algebra()
    rng = ctx.rng("engine.normal-form")
    bad = {}
    for t in range(20):
        p, q = _random_free(ctx.spec, rng), _random_free(ctx.spec, rng)
        if normal_form(p * q, alg) != normal_form(p, alg) * normal_form(q, alg):
            bad[f"mult{t}"] = [str(p), str(q)]
        if normal_form(p + q.scale(3), alg) != normal_form(p, alg) + normal_form(q, alg).scale(3):
            bad[f"lin{t}"] = [str(p), str(q)]
        nf = normal_form(p, alg)
        lifted = FreePolynomial({alg.basis[i]: c for i, c in enumerate(nf.coeffs) if c}, ctx.spec.generators)
        if normal_form(lifted, alg) != nf:
            bad[f"idem{t}"] = str(p)
    # the ideal subspace is stable under one more round of generator multiplications
    for piv, row in alg.rewrite_rows.items():
        rel = FreePolynomial({piv: 1, **{alg.basis[k]: -c for k, c in row.items()}}, ctx.spec.generators)
        for g in ctx.spec.generators:
            G = FreePolynomial.generator(g, ctx.spec.generators)
            if normal_form(G * rel, alg) or normal_form(rel * G, alg):
                bad[f"closure.{alg.render_word(piv)}.{g}"] = str(rel)
    return _verdict("engine.normal-form", "normal form is multiplicative, linear and idempotent; the ideal closure is stable",
                    ENGINE_ANCHOR, bad)


@register("engine.grading")
def _engine_grading(ctx):
    alg = ctx.algebra()
    rng = ctx.rng("engine.grading")
    top = alg.nilpotency_degree
    bad = {}
    for i, di in enumerate(alg.degrees):
        for j, dj in enumerate(alg.degrees):
            for k, _ in alg.table[i][j]:
                if di + dj >= top or alg.degrees[k] != di + dj:
                    bad[f"{i},{j}"] = k
    for t in range(10):
        u = _random_element(alg, rng)
        if sum((graded_component(u, k) for k in range(1, top)), alg.zero()) != u:
            bad[f"sum{t}"] = str(u)
    return _verdict("engine.grading", "B_(i) B_(j) lies in B_(i+j) and vanishes for i + j >= 8",
                    ENGINE_ANCHOR, bad)


@register("engine.circle-group")
def _engine_circle(ctx):
    alg = ctx.algebra()
    rng = ctx.rng("engine.circle-group")
    bad = {}
    for t in range(8):
        u, v, w = (_random_element(alg, rng) for _ in range(3))
        if circle(circle(u, v), w) != circle(u, circle(v, w)):
            bad[f"assoc{t}"] = [str(u), str(v), str(w)]
        if circle(alg.zero(), u) != u or circle(u, alg.zero()) != u:
            bad[f"identity{t}"] = str(u)
        hull = UnitalElement.from_part(u) * UnitalElement.from_part(v)
        if hull != UnitalElement.from_part(circle(u, v)):
            bad[f"hull{t}"] = [str(u), str(v)]
    return _verdict("engine.circle-group", "u o v = u + v + uv is associative with identity 0 and matches (1+u)(1+v)",
                    ENGINE_ANCHOR, bad)


@register("engine.quasi-inverse")
def _engine_qi(ctx):
    alg = ctx.algebra()
    rng = ctx.rng("engine.quasi-inverse")
    bad = {}
    elems = [_random_element(alg, rng) for _ in range(8)] + [generic_element(alg, "u")]
    for t, u in enumerate(elems):
        q = quasi_inverse(u)
        if circle(u, q) or circle(q, u):
            bad[f"inverse{t}"] = str(u)
        if UnitalElement.from_part(u).inverse() != UnitalElement.from_part(q):
            bad[f"hull{t}"] = str(u)
    if quasi_inverse(alg.gen("y")) != alg.element("-y + y^2 - y^3"):
        bad["b"] = str(quasi_inverse(alg.gen("y")))
    return _verdict("engine.quasi-inverse", "quasi_inverse is a two-sided circle inverse and equals (1+u)^-1 - 1",
                    ENGINE_ANCHOR, bad)


@register("engine.filtration")
def _engine_filtration(ctx):
    alg = ctx.algebra()
    top = alg.nilpotency_degree
    bad = [f"{i},{j}" for i in range(1, top) for j in range(1, top - i + 1) if not filtration_check(alg, i, j)]
    return _verdict("engine.filtration", "(1 + B^i, 1 + B^j) lies in 1 + B^(i+j) for all i + j <= 8",
                    ENGINE_ANCHOR, {"pairs": bad} if bad else {})


@register("engine.parser-roundtrip")
def _engine_parser(ctx):
    rng = ctx.rng("engine.parser-roundtrip")
    bad = {}
    for t in range(30):
        p = _random_free(ctx.spec, rng)
        text = render_poly(p)
        if parse_poly(text, ctx.spec.generators) != p:
            bad[f"poly{t}"] = text
    if parse_presentation(render_presentation(ctx.spec)) != ctx.spec:
        bad["presentation"] = "render/parse does not round-trip"
    return _verdict("engine.parser-roundtrip", "polynomials and presentations survive render -> parse",
                    ENGINE_ANCHOR, bad)


# ---------------------------------------------------------------------------
# catalog handling


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    suite: int
    suite_name: str
    expected: str = PASS


def load_catalog(path=None) -> List[CatalogEntry]:
    doc = yaml.safe_load(Path(path or DEFAULT_CATALOG).read_text(encoding="utf-8"))
    entries = []
    for suite in doc["suites"]:
        for item in suite["claims"]:
            if isinstance(item, str):
                item = {"id": item}
            expected = item.get("expected", PASS)
            if expected not in (PASS, FAIL, EXPLORATORY):
                raise ValueError(f"bad expected status {expected!r} for {item['id']}")
            if item["id"] not in REGISTRY:
                raise ValueError(f"catalog names unknown claim {item['id']!r}")
            entries.append(CatalogEntry(item["id"], int(suite["number"]), suite["name"], expected))
    ids = [e.id for e in entries]
    if len(ids) != len(set(ids)):
        raise ValueError("catalog lists a claim twice")
    return entries


def run_claim(spec: PresentationSpec, claim_id: str, expected: str = PASS, seed: int = 0) -> Claim:
    """Evaluate one registered claim and stamp its expected status and timing."""
    start = time.perf_counter()
    claim = REGISTRY[claim_id](Context(spec, seed))
    if claim.id != claim_id:
        raise AssertionError(f"claim function for {claim_id!r} produced {claim.id!r}")
    if claim.expected != EXPLORATORY:
        claim.expected = expected
    claim.seconds = time.perf_counter() - start
    return claim


def _run_one(args):
    spec, claim_id, expected, seed = args
    return run_claim(spec, claim_id, expected, seed)


def run_catalog(spec: PresentationSpec, entries: Sequence[CatalogEntry], seed: int = 0,
                jobs: int = 1) -> List[Claim]:
    """Evaluate catalog entries; the result order is the catalog order for any ``jobs``."""
    work = [(spec, e.id, e.expected, seed) for e in entries]
    if jobs <= 1 or len(work) <= 1:
        return [_run_one(w) for w in work]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, work))


def build_report(spec: PresentationSpec, claims: Sequence[Claim], alg: Optional[QuotientAlgebra] = None) -> VerificationReport:
    alg = alg or _algebra(spec, None)
    report = VerificationReport(summary=alg.summary())
    report.extend(claims)
    report.validate()
    return report


def suite_of(entries: Sequence[CatalogEntry], number: int) -> List[CatalogEntry]:
    return [e for e in entries if e.suite == number]


__all__ = [
    "Context", "REGISTRY", "CatalogEntry", "load_catalog", "run_claim", "run_catalog", "build_report",
    "suite_of", "two_sided_span_rank", "DEFAULT_SPEC", "DEFAULT_CATALOG",
]
