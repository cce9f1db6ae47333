"""Standard-basis elements: products, braid generators, word normal forms, bases."""

import random
from fractions import Fraction

import pytest

from awbraid.elements import (
    BasisKey,
    Element,
    SpinMismatchError,
    e2_projector,
    g1_element,
    g2_element,
    idempotent,
    kappa_element,
    one,
    parse_word,
    path_basis,
    path_to_std,
    sigma_element,
    std_basis,
    word_normal_form,
)
from awbraid.halfint import HalfInt
from awbraid.kpoly import KPoly
from awbraid.laurent import LaurentQ, chi, qfactor
from awbraid.paths import Path
from awbraid.ratq import RatQ
from awbraid.reps import centralizer_dimension
from awbraid.rewrite import f_poly, tau_poly

HALF = HalfInt(1)
ONE = HalfInt(2)
SPINS = [HalfInt(t) for t in (1, 2, 3, 4)]


class TestBasis:
    def test_half_spin_standard_basis(self):
        assert [(k.a, k.c, k.p) for k in std_basis(HALF)] == [
            (0, 0, 0),
            (0, 1, 0),
            (1, 0, 0),
            (1, 1, 0),
            (1, 1, 1),
        ]

    def test_cardinalities(self):
        for s in SPINS:
            expected = centralizer_dimension(s)
            assert len(std_basis(s)) == expected
            assert len(path_basis(s)) == expected

    def test_path_basis_has_no_flat_at_level_zero(self):
        for s in SPINS:
            for p in path_basis(s):
                for x, y in zip(p.levels, p.levels[1:]):
                    assert not (x == 0 and y == 0)

    def test_key_validation(self):
        with pytest.raises(ValueError):
            BasisKey(0, 0, 1).validate(HALF)
        with pytest.raises(ValueError):
            BasisKey(0, 2, 0).validate(HALF)
        BasisKey(1, 1, 1).validate(HALF)


class TestElementArithmetic:
    def test_unit(self):
        rng = random.Random(3)
        for s in SPINS[:3]:
            x = _random_element(s, rng)
            assert one(s) @ x == x
            assert x @ one(s) == x

    def test_spin_mismatch(self):
        with pytest.raises(SpinMismatchError):
            one(HALF) @ one(ONE)

    def test_orthogonal_keys_annihilate(self):
        x = Element.basis_element(ONE, BasisKey(0, 1, 0))
        y = Element.basis_element(ONE, BasisKey(2, 2, 0))
        assert (x @ y).is_zero

    def test_peak_contraction(self):
        x = Element.basis_element(HALF, BasisKey(0, 1, 0))
        y = Element.basis_element(HALF, BasisKey(1, 0, 0))
        expected = Element(HALF, {BasisKey(0, 0, 0): f_poly(1, HALF).evaluate(chi(HALF))})
        assert x @ y == expected

    def test_temperley_lieb_sandwich(self):
        e1 = idempotent(HALF, 0)
        e2 = e2_projector(HALF, 0)
        chi0 = RatQ.of(chi(HalfInt(0)))
        assert e1 @ e2 @ e1 == e1.scaled(chi0 ** -2)

    def test_from_terms_auto_remainders(self):
        # kappa on the level-0 projector collapses to chi_s
        got = Element.from_terms(HALF, [(0, 0, 1, RatQ.one())])
        assert got == Element(HALF, {BasisKey(0, 0, 0): RatQ.of(chi(HALF))})

    def test_kappa_element_is_central(self):
        rng = random.Random(5)
        for s in SPINS[:2]:
            k = kappa_element(s)
            x = _random_element(s, rng)
            assert k @ x == x @ k


class TestSigma:
    def test_diagonal_form_at_half_spin(self):
        got = sigma_element(1, 1, HALF)
        assert got == Element(
            HALF,
            {BasisKey(0, 0, 0): RatQ.one(), BasisKey(1, 1, 0): -RatQ.of(LaurentQ.q_power(2))},
        )

    @pytest.mark.parametrize("s", SPINS)
    @pytest.mark.parametrize("i", [1, 2])
    def test_inverses(self, s, i):
        assert sigma_element(i, 1, s) @ sigma_element(i, -1, s) == one(s)

    @pytest.mark.parametrize("s", SPINS[:3])
    def test_characteristic_polynomials(self, s):
        for i in (1, 2):
            sig = sigma_element(i, 1, s)
            acc = one(s)
            for p in range(s.twice + 1):
                acc = acc @ (sig - one(s).scaled(qfactor(p)))
            assert acc.is_zero
        for g in (g1_element(s), g2_element(s)):
            acc = one(s)
            for p in range(s.twice + 1):
                acc = acc @ (g - one(s).scaled(chi(HalfInt.of(p))))
            assert acc.is_zero


class TestWords:
    def test_parse(self):
        assert parse_word("s1 s2^-1 s2 s1^1") == [(1, 1), (2, -1), (2, 1), (1, 1)]
        with pytest.raises(ValueError):
            parse_word("s3")
        with pytest.raises(ValueError):
            parse_word("s1^2")

    def test_empty_word_is_unit(self):
        assert word_normal_form("", ONE) == one(ONE)

    @pytest.mark.parametrize("s", SPINS)
    def test_braid_relation(self, s):
        assert word_normal_form("s1 s2 s1", s) == word_normal_form("s2 s1 s2", s)

    def test_cancellation(self):
        assert word_normal_form("s1 s1^-1", ONE) == one(ONE)
        assert word_normal_form("s2^-1 s1 s1^-1 s2", ONE) == one(ONE)


class TestPathToStd:
    def test_monotone_is_key(self):
        for s in SPINS[:3]:
            for a in range(s.twice + 1):
                for c in range(s.twice + 1):
                    from awbraid.paths import monotone_path

                    got = path_to_std(monotone_path(a, c), s)
                    assert got == Element.basis_element(s, BasisKey(a, c, 0))

    def test_flat_loop_is_tau(self):
        for s in SPINS[:2]:
            for a in range(1, s.twice + 1):
                got = path_to_std(Path((a, a)), s)
                tau = tau_poly(a, s)
                expected = Element.from_terms(
                    s, [(a, a, i, cv) for i, cv in enumerate(tau.coeffs)]
                )
                assert got == expected

    @pytest.mark.parametrize("s", SPINS)
    def test_triangular_change_of_basis(self, s):
        keys = {k: i for i, k in enumerate(std_basis(s))}
        paths = path_basis(s)
        assert len(paths) == len(keys)
        for gamma in paths:
            x = path_to_std(gamma, s)
            # within the (first, last) cell the kappa-degree equals the loop length,
            # so the transformation is triangular with nonzero diagonal
            top_power = gamma.length - abs(gamma.first - gamma.last)
            lead = BasisKey(gamma.first, gamma.last, top_power)
            assert not x.coeff(lead).is_zero
            for key in x.coeffs:
                assert (key.a, key.c) == (gamma.first, gamma.last)
                assert key.p <= top_power


def _random_element(s, rng, nterms=3):
    keys = std_basis(s)
    coeffs = {}
    for _ in range(nterms):
        key = rng.choice(keys)
        coeffs[key] = RatQ.of(
            LaurentQ({rng.randint(-2, 2): Fraction(rng.randint(-4, 4), rng.randint(1, 3))})
        )
    return Element(s, coeffs)


class TestAssociativitySmoke:
    def test_exact_small_spins(self):
        rng = random.Random(11)
        for s in SPINS[:2]:
            for _ in range(40):
                x, y, z = (_random_element(s, rng) for _ in range(3))
                assert (x @ y) @ z == x @ (y @ z)
