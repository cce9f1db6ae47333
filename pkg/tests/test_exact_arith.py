"""Exact arithmetic layer: q-notation, canonical rational functions, cyclotomic limits."""

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from awbraid.halfint import HalfInt, halfint_range
from awbraid.laurent import LaurentQ, chi, cyclotomic, from_int_list, qfactor, qint
from awbraid.ratq import PoleError, RatQ, eval_q, ratq_arith
from awbraid.kpoly import KPoly, kpoly_rem
from awbraid.cyclo import CycloElem, cyclo_limit, cyclo_limit_with_valuations, phi_valuation


def L(**monomials) -> LaurentQ:
    """Shorthand: L(e2=1, em2=-1) = q^2 - q^-2 (em = negative exponent)."""
    coeffs = {}
    for key, value in monomials.items():
        exp = int(key[2:]) * -1 if key.startswith("em") else int(key[1:])
        coeffs[exp] = value
    return LaurentQ(coeffs)


q = LaurentQ.q_power(1)
qinv = LaurentQ.q_power(-1)


class TestHalfInt:
    def test_construction(self):
        assert HalfInt.of(2).twice == 4
        assert HalfInt.of(Fraction(3, 2)).twice == 3
        assert HalfInt.of("1/2").twice == 1
        with pytest.raises(ValueError):
            HalfInt.of(Fraction(1, 3))

    def test_arithmetic_and_order(self):
        s = HalfInt.of(Fraction(3, 2))
        assert (s + 1).twice == 5
        assert (s - s).twice == 0
        assert abs(HalfInt(-3)) == HalfInt(3)
        assert HalfInt(1) < HalfInt(2)
        assert str(s) == "3/2" and str(HalfInt.of(2)) == "2"

    def test_range_steps_by_one(self):
        got = list(halfint_range(HalfInt(1), HalfInt(7)))
        assert [h.twice for h in got] == [1, 3, 5, 7]
        assert list(halfint_range(HalfInt(4), HalfInt(2))) == []


class TestQNotation:
    def test_chi(self):
        assert chi(HalfInt.of(0)) == q + qinv
        assert chi(HalfInt.of(Fraction(-1, 2))) == LaurentQ({0: 2})
        # 2p+1 = 4 at p = 3/2
        assert chi(HalfInt.of(Fraction(3, 2))) == L(e4=1, em4=1)

    def test_qfactor(self):
        assert qfactor(0) == LaurentQ.one()
        assert qfactor(1) == L(e2=-1)
        assert qfactor(2) == L(e6=1)
        with pytest.raises(ValueError):
            qfactor(-1)

    def test_qint(self):
        assert qint(1) == LaurentQ.one()
        assert qint(2) == q + qinv
        assert qint(0) == LaurentQ.zero()
        for n in range(-6, 7):
            assert qint(-n) == -qint(n)
            # oracle: [n](q - q^-1) telescopes to q^n - q^-n
            assert qint(n) * (q - qinv) == LaurentQ.q_power(n) - LaurentQ.q_power(-n)


rationals = st.fractions(
    min_value=Fraction(-4), max_value=Fraction(4), max_denominator=6
)


@st.composite
def laurents(draw, max_terms=4):
    n = draw(st.integers(min_value=0, max_value=max_terms))
    coeffs = {}
    for _ in range(n):
        e = draw(st.integers(min_value=-5, max_value=5))
        coeffs[e] = draw(rationals)
    return LaurentQ(coeffs)


@st.composite
def ratqs(draw):
    num = draw(laurents())
    den = draw(laurents().filter(lambda f: not f.is_zero))
    return RatQ(num, den)


class TestRatQ:
    def test_examples(self):
        assert ratq_arith(RatQ.of(q - qinv), RatQ.of(q + qinv), "mul") == RatQ.of(L(e2=1, em2=-1))
        # difference of brackets factors per the hyperbolic product identity
        lhs = RatQ.of(chi(HalfInt.of(1))) - RatQ.of(chi(HalfInt.of(0)))
        assert lhs == RatQ.of(L(e2=1, em2=-1) * (q - qinv))
        x = RatQ.fraction(L(e1=3, em2=-7), L(e2=1, e0=5))
        assert ratq_arith(x, x, "div") == RatQ.one()

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ratq_arith(RatQ.one(), RatQ.zero(), "div")

    def test_canonical_den_is_ordinary_primitive(self):
        r = RatQ.fraction(LaurentQ.one(), L(em2=4, em1=2))
        assert min(e for e, _ in r.den.terms()) == 0
        assert r.den.coeff(0) != 0
        _, prim, _ = r.den.content_and_primitive()
        assert r.den == from_int_list(prim)

    @given(ratqs(), ratqs())
    @settings(max_examples=150, deadline=None)
    def test_add_then_subtract_is_structural_identity(self, x, y):
        assert (x + y) - y == x

    @given(ratqs(), ratqs())
    @settings(max_examples=150, deadline=None)
    def test_mul_then_divide_is_structural_identity(self, x, y):
        if not y.is_zero:
            assert (x * y) / y == x

    @given(ratqs())
    @settings(max_examples=100, deadline=None)
    def test_inverse(self, x):
        if not x.is_zero:
            assert x * x.inverse() == RatQ.one()

    def test_chi_difference_identity(self):
        # chi_a - chi_b = (q^(a-b) - q^(b-a)) (q^(a+b+1) - q^(-a-b-1)) for a - b integer
        pairs = [(0, 0), (1, 0), (2, 1), (Fraction(3, 2), Fraction(1, 2)),
                 (Fraction(5, 2), Fraction(-1, 2)), (3, 1), (Fraction(1, 2), Fraction(7, 2))]
        for a_, b_ in pairs:
            a, b = HalfInt.of(a_), HalfInt.of(b_)
            d = (a - b).as_int()
            t = a.twice + b.twice + 2  # 2(a+b+1)
            rhs = (LaurentQ.q_power(d) - LaurentQ.q_power(-d)) * (
                LaurentQ.q_power(t // 2) - LaurentQ.q_power(-t // 2)
            )
            assert chi(a) - chi(b) == rhs

    def test_eval_q(self):
        assert eval_q(RatQ.of(chi(HalfInt.of(0))), Fraction(2)) == Fraction(5, 2)
        assert eval_q(RatQ.of(qint(3)), Fraction(2)) == Fraction(21, 4)
        with pytest.raises(PoleError):
            eval_q(RatQ.fraction(1, q - 1), Fraction(1))


class TestCyclotomic:
    def test_small_cases(self):
        assert cyclotomic(1) == q - 1
        assert cyclotomic(6) == L(e2=1, e1=-1, e0=1)
        assert cyclotomic(12) == L(e4=1, e2=-1, e0=1)

    def test_product_over_divisors(self):
        for n in range(1, 25):
            prod = LaurentQ.one()
            for d in range(1, n + 1):
                if n % d == 0:
                    prod = prod * cyclotomic(d)
            assert prod == LaurentQ.q_power(n) - 1


class TestCycloLimit:
    def test_ratio_of_vanishing_orders(self):
        r = RatQ.fraction(L(e6=1, em6=-1), L(e2=1, em2=-1))
        assert cyclo_limit(r, 6).is_zero

    def test_bracket_value_at_sixth_root(self):
        # zeta + 1/zeta = 2 cos(pi/3) = 1
        assert cyclo_limit(RatQ.of(chi(HalfInt.of(0))), 6) == CycloElem(6, [1])

    def test_pole(self):
        with pytest.raises(PoleError):
            cyclo_limit(RatQ.fraction(1, q - 1), 1)

    def test_lhopital_valuations(self):
        # canonical RatQ cancels the shared cyclotomic factor at construction,
        # so the surviving valuation pair is (1, 0) and the limit vanishes
        phi6 = cyclotomic(6)
        r = RatQ.fraction(phi6 * phi6 * L(e1=1, e0=3), phi6 * L(e0=7))
        elem, v_num, v_den = cyclo_limit_with_valuations(r, 6)
        assert (v_num, v_den) == (1, 0)
        assert elem.is_zero
        assert phi_valuation(phi6 * phi6, 6) == 2
        with pytest.raises(PoleError):
            cyclo_limit(RatQ.fraction(L(e1=1, e0=3), phi6), 6)

    def test_agrees_with_high_precision_numerics(self):
        import random

        rng = random.Random(20240601)
        mpmath.mp.dps = 60
        checked = 0
        while checked < 100:
            num = LaurentQ(
                {rng.randint(-5, 5): Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                 for _ in range(rng.randint(1, 4))}
            )
            den = LaurentQ(
                {rng.randint(-5, 5): Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                 for _ in range(rng.randint(1, 4))}
            )
            if num.is_zero or den.is_zero:
                continue
            n = rng.choice([3, 4, 5, 6, 8, 10, 12])
            r = RatQ(num, den)
            if r.is_zero:
                continue
            if phi_valuation(r.den, n) > 0:
                continue
            limit = cyclo_limit(r, n)
            zeta = mpmath.exp(2j * mpmath.pi / n)
            direct = _eval_laurent_mp(r.num, zeta) / _eval_laurent_mp(r.den, zeta)
            reduced = sum(mpmath.mpf(c.numerator) / c.denominator * zeta**e
                          for e, c in enumerate(limit.coeffs))
            assert abs(direct - reduced) < mpmath.mpf(10) ** -30
            checked += 1


def _eval_laurent_mp(f: LaurentQ, z):
    return sum(mpmath.mpf(c.numerator) / c.denominator * z**e for e, c in f.terms())


class TestKPoly:
    def test_rem_examples(self):
        s = HalfInt.of(Fraction(3, 2))
        m = KPoly.linear_root(chi(s))
        f = KPoly.kappa() * KPoly.kappa()
        r = kpoly_rem(f, m)
        assert r == KPoly.constant(RatQ.of(chi(s)) * RatQ.of(chi(s)))
        assert kpoly_rem(m, m).is_zero
        low = KPoly([RatQ.of(3)])
        assert kpoly_rem(low, m) == low

    def test_degree_sentinel(self):
        assert KPoly.zero().degree == -1
        assert KPoly.one().degree == 0

    def test_root_multiplicity(self):
        root = RatQ.of(chi(HalfInt.of(1)))
        f = KPoly.linear_root(root) * KPoly.linear_root(root) * KPoly.linear_root(RatQ.of(5))
        assert f.root_multiplicity(root) == 2
        assert f.root_multiplicity(RatQ.of(5)) == 1
        assert f.root_multiplicity(RatQ.of(7)) == 0

    def test_evaluate(self):
        f = KPoly([RatQ.of(1), RatQ.of(2), RatQ.of(1)])  # (k+1)^2
        assert f.evaluate(RatQ.of(q - 1)) == RatQ.of(q * q)
