from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from engelcheck.scalars import (GF, QQ, Mod, Polynomial, PolynomialRing, VariantMismatch,
                                WeightedVariableSet, domain_of, field_for, format_scalar, inverse,
                                is_prime, poly_mul_truncated, reduce_mod, same_variant)

VARS = WeightedVariableSet(("s", "t", "w"), (1, 2, 3))
RING = PolynomialRing(QQ, VARS)


@pytest.mark.parametrize("n,expected", [(0, False), (1, False), (2, True), (3, True), (4, False),
                                        (5, True), (9, False), (97, True)])
def test_is_prime(n, expected):
    assert is_prime(n) is expected


class TestMod:
    def test_arithmetic(self):
        a, b = Mod(3, 7), Mod(5, 7)
        assert a + b == Mod(1, 7)
        assert a - b == Mod(5, 7)
        assert a * b == Mod(1, 7)
        assert -a == Mod(4, 7)
        assert a / b == a * b.inverse()
        assert a ** 3 == Mod(6, 7)

    def test_int_literals_embed(self):
        assert Mod(3, 5) + 4 == Mod(2, 5)
        assert 2 * Mod(3, 5) == Mod(1, 5)
        assert 1 - Mod(3, 5) == Mod(3, 5)
        assert Mod(6, 5) == 1

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            Mod(0, 5).inverse()

    @pytest.mark.parametrize("other", [Mod(1, 7), Fraction(1, 2)])
    def test_mixing_variants_raises(self, other):
        with pytest.raises(VariantMismatch):
            Mod(1, 5) + other

    def test_str(self):
        assert str(Mod(12, 5)) == "2 mod 5"

    @given(st.integers(), st.integers(), st.integers(), st.sampled_from([2, 3, 5, 7, 11]))
    def test_ring_axioms(self, x, y, z, p):
        a, b, c = Mod(x, p), Mod(y, p), Mod(z, p)
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a + (-a) == 0
        if a:
            assert a * a.inverse() == 1


class TestFields:
    def test_rationals(self):
        assert QQ.convert(3) == 3
        assert QQ.inverse(Fraction(2, 3)) == Fraction(3, 2)
        with pytest.raises(ZeroDivisionError):
            QQ.inverse(0)

    def test_prime_field(self):
        F = GF(7)
        assert F.convert(Fraction(1, 2)) == Mod(4, 7)
        assert F.characteristic == 7
        with pytest.raises(ZeroDivisionError):
            F.convert(Fraction(1, 7))
        assert GF(7) is F

    @pytest.mark.parametrize("bad", [1, 4, 9, -3])
    def test_non_prime_rejected(self, bad):
        with pytest.raises(ValueError):
            field_for(bad)

    def test_field_for(self):
        assert field_for(0) == QQ
        assert field_for(5) == GF(5)

    def test_reduce_mod(self):
        assert reduce_mod(Fraction(5, 2), 7) == Mod(6, 7)

    def test_domain_helpers(self):
        assert domain_of(Fraction(1, 2)) == QQ
        assert domain_of(Mod(1, 3)) == GF(3)
        assert domain_of(RING.gen("s")) == RING
        assert same_variant(1, Fraction(1, 3))
        assert not same_variant(1, Mod(1, 3))
        assert inverse(Mod(2, 5)) == Mod(3, 5)
        assert inverse(Fraction(2, 5)) == Fraction(5, 2)

    def test_format(self):
        assert format_scalar(Fraction(5, 2)) == "5/2"
        assert format_scalar(Mod(3, 5)) == "3 mod 5"


class TestPolynomial:
    def test_variables_and_weights(self):
        s, t, w = (RING.gen(n) for n in "stw")
        p = s * t + w * w
        assert p.max_weight() == 6
        assert p.variables() == {0, 1, 2}
        assert str(s * s * t - 2 * w) == "s^2*t - 2*w"

    def test_base_constants_embed(self):
        s = RING.gen("s")
        assert s + 1 - 1 == s
        assert (s * Fraction(1, 2)).coefficient((0,)) == Fraction(1, 2)
        assert RING.convert(3) == RING.one.scale(3)

    def test_mismatched_rings(self):
        other = PolynomialRing(GF(5), VARS)
        with pytest.raises(VariantMismatch):
            RING.gen("s") + other.gen("s")
        with pytest.raises(VariantMismatch):
            other.gen("s") + Fraction(1, 2)

    def test_inverse(self):
        assert RING.convert(4).inverse() == RING.convert(Fraction(1, 4))
        with pytest.raises(ValueError):
            RING.gen("s").inverse()
        with pytest.raises(ZeroDivisionError):
            RING.zero.inverse()

    def test_truncate_and_evaluate(self):
        s, t, w = (RING.gen(n) for n in "stw")
        p = s + t * t + s * w * w
        assert p.truncate(4) == s + t * t
        assert p.evaluate({0: 2, 1: 3, 2: 1}) == 2 + 9 + 2

    def test_weighted_truncated_product(self):
        s, t, w = (RING.gen(n) for n in "stw")
        x, y = s + t + w, s * s + w
        assert poly_mul_truncated(x, y, VARS, 4) == (x * y).truncate(4)
        assert poly_mul_truncated(x, y, VARS, None) == x * y

    @given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(-3, 3)), max_size=5),
           st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(-3, 3)), max_size=5),
           st.integers(0, 8))
    def test_truncated_product_property(self, xs, ys, cap):
        def build(spec):
            total = RING.zero
            for i, j, c in spec:
                total = total + RING.gen("stw"[i]) * RING.gen("stw"[j]).scale(c)
            return total
        x, y = build(xs), build(ys)
        assert poly_mul_truncated(x, y, VARS, cap) == (x * y).truncate(cap)
        assert x * y == y * x

    def test_monomial_rendering(self):
        m = VARS.monomial({"s": 2, "w": 1})
        assert VARS.render_monomial(m) == "s^2*w"
        assert VARS.weight(m) == 5
        assert VARS.exponents(m) == {0: 2, 2: 1}

    def test_polynomial_over_prime_field(self):
        R = PolynomialRing(GF(3), VARS)
        s = R.gen("s")
        assert (s + 1) ** 3 == s ** 3 + 1
        assert isinstance(Polynomial.constant(2, VARS, GF(3)).coefficient(()), Mod)
