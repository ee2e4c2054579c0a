import pytest

from engelcheck.freealg import engel_bracket, left_normed, lie_bracket
from engelcheck.lie import (DEGREE_RULE_ZERO, F_LABELS, LOW_DEGREE_NAMES, LOW_DEGREE_WORDS, arrangement_sum,
                            f_decomposition, generic_element, generic_pair, lie_engel_check,
                            lie_lower_central_series, lie_series_space, multisets)
from engelcheck.report import EXPLORATORY, FAIL, PASS

STRATEGIES = ("symbolic", "symmetrized")


def test_generic_element_shape(B):
    u = generic_element(B, "u")
    assert u.domain.vars.names[0] == "u_1" and len(u.domain.vars) == 26
    top = B.index[B.spec.word("y^2*x*y*x*y^2")]
    assert u.domain.vars.weight((top,)) == 7
    u, v = generic_pair(B)
    assert set(u.domain.vars.names[:26]).isdisjoint(u.domain.vars.names[26:])
    assert u.coeffs[0] != v.coeffs[0]


@pytest.mark.parametrize("strategy", STRATEGIES)
@pytest.mark.parametrize("alg_name", ["B", "B5", "B7"])
def test_five_engel(request, alg_name, strategy):
    alg = request.getfixturevalue(alg_name)
    claim = lie_engel_check(alg, 5, strategy)
    assert claim.status == PASS and claim.matches
    assert claim.witness is None


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_strategy_agreement(B, n):
    results = [lie_engel_check(B, n, s) for s in STRATEGIES]
    assert results[0].status == results[1].status == (PASS if n >= 5 else FAIL)
    for claim in results:
        if claim.status == FAIL:
            w = claim.witness
            value = engel_bracket(B.element(w["u_text"]), B.element(w["v_text"]), n)
            assert value and str(value) == w["value"]


def test_four_engel_witness(B):
    claim = lie_engel_check(B, 4, "symbolic", expected=FAIL)
    assert claim.status == FAIL and claim.matches
    assert (claim.witness["u_text"], claim.witness["v_text"]) == ("x", "y")
    assert engel_bracket(B.gen("x"), B.gen("y"), 4) == B.element("-4*y*x*y^3 - 4*y^3*x*y")
    assert not engel_bracket(B.gen("x"), B.gen("y"), 5)


def test_unknown_strategy(B):
    with pytest.raises(ValueError):
        lie_engel_check(B, 5, "guess")


@pytest.mark.parametrize("p", [2, 3])
def test_small_characteristics_are_exploratory(spec, p):
    from engelcheck.quotient import build_quotient
    claim = lie_engel_check(build_quotient(spec, characteristic=p), 5)
    assert claim.status == EXPLORATORY and claim.expected == EXPLORATORY and claim.matches


def test_multiset_budget_prunes(B):
    full = list(multisets(B, 2, None))
    pruned = list(multisets(B, 2, 7))
    assert len(full) == 26 * 27 // 2
    assert len(pruned) < len(full)


INTERMEDIATE = [
    (["x", "y", "x"], "2*x*y*x"),
    (["x*y*x", "y", "y", "y"], "-3*y*x*y*x*y^2 + 3*y^2*x*y*x*y"),
    (["x", "y", "x", "y", "y", "y"], "-6*y*x*y*x*y^2 + 6*y^2*x*y*x*y"),
    (["x", "y", "y", "y", "x"], "2*x*y^3*x + 3*y^2*x*y*x + 3*x*y*x*y^2"),
    (["x", "y", "y", "y", "x", "y"], "2*x*y^3*x*y + 3*y^2*x*y*x*y - 2*y*x*y^3*x - 3*y*x*y*x*y^2"),
    (["x", "y", "y", "y", "y", "x"], "-4*y*x*y^3*x + 4*x*y^3*x*y"),
]


@pytest.mark.parametrize("items,expected", INTERMEDIATE)
def test_intermediate_identities(B, items, expected):
    assert left_normed([B.element(t) for t in items]) == B.element(expected)


def test_abba_equals_abab(B):
    a, b = B.gen("x"), B.gen("y")
    assert left_normed([a, b, b, a]) == left_normed([a, b, a, b])


def test_degree_one_in_a_rule(B):
    """Every basis product of x-degree 1 and y-degree 5 or 6 is zero."""
    for i, u in enumerate(B.basis):
        for j, v in enumerate(B.basis):
            w = tuple(u) + tuple(v)
            if w.count(0) == 1 and w.count(1) in (5, 6):
                assert not B.table[i][j]


# ---------------------------------------------------------------------------
# the twenty components


@pytest.fixture(scope="module")
def fC(C):
    return f_decomposition(C)


@pytest.fixture(scope="module")
def fB(B):
    return f_decomposition(B)


def _label_oracle(alg, label):
    """Sum over distinct orderings encoded by a coefficient label."""
    words = dict(zip(LOW_DEGREE_NAMES, LOW_DEGREE_WORDS))
    first, rest = None, []
    for part in label.split("*"):
        name, _, e = part.partition("^")
        if name.endswith("1"):
            first = words[name[:-1]]
        else:
            rest += [words[name[:-1]]] * int(e or 1)
    return arrangement_sum(alg, first, rest)


def test_labels():
    assert len(F_LABELS) == 20
    assert F_LABELS[0] == "alpha1*beta2^5"
    assert F_LABELS[19] == "mu1*alpha2^2*beta2^3"


@pytest.mark.parametrize("i", range(20))
def test_components_match_arrangement_sums(C, B, fC, fB, i):
    assert fC[i] == _label_oracle(C, F_LABELS[i])
    assert fB[i] == _label_oracle(B, F_LABELS[i])


def test_degree_rule(fC):
    for i in DEGREE_RULE_ZERO:
        assert not fC[i]


def test_f1(C, spec, fC):
    from engelcheck.quotient import normal_form
    h1 = normal_form(spec.polynomial_clauses()[0].polynomial, C)
    assert fC[1] == C.element("-15*y*x*y*x*y^2 + 15*y^2*x*y*x*y - 6*y*x*y^3*x + 6*x*y^3*x*y")
    assert fC[1] == h1.scale(3)
    assert fC["f7"] == -fC[1]


def test_components_in_C_and_B(fC, fB):
    assert fC.nonzero() == ["f1", "f7", "f9", "f11", "f15", "f17"]
    assert fB.nonzero() == []
    assert not fC.unexpected and not fB.unexpected


def test_f19_terms_vanish_individually(B):
    for order in (["x", "x", "y", "y", "y"], ["x", "y", "x", "y", "y"], ["x", "y", "y", "x", "y"],
                  ["x", "y", "y", "y", "x"]):
        assert not left_normed([B.element("y^2")] + [B.element(t) for t in order])


# ---------------------------------------------------------------------------
# lower central series


def test_lower_central_series(B):
    dims, cls = lie_lower_central_series(B)
    assert dims == [26, 18, 15, 11, 7, 2, 1]
    assert cls == 7


def test_second_term_has_no_degree_one_part(B):
    for vec in lie_series_space(B, 2):
        assert not vec.coeffs[0] and not vec.coeffs[1]


def test_engel_monotone(B):
    statuses = [lie_engel_check(B, n).status for n in range(1, 8)]
    first_pass = statuses.index(PASS)
    assert all(s == PASS for s in statuses[first_pass:])
    assert first_pass + 1 == 5


def test_bracket_of_generic_is_antisymmetric(B):
    u, v = generic_pair(B)
    assert lie_bracket(u, v) == -lie_bracket(v, u)
