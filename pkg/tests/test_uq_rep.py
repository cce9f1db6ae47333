"""Representation layer: spin matrices, Casimir spectra, projectors, braid operators."""

from fractions import Fraction

import pytest

from awbraid.halfint import HalfInt, halfint_range
from awbraid.laurent import LaurentQ, chi, qfactor
from awbraid.matrix import RepMatrix, SpecializationError, commutator, mat_product
from awbraid.ratq import RatQ
from awbraid.reps import (
    casimir2,
    casimir_of,
    centralizer_dimension,
    commutant_dim,
    degeneracy,
    j_min,
    spectral_projectors,
    sigma_check2,
    sigma_check2_inv,
    spin_rep,
    three_site,
    three_site_ops,
    two_site_ops,
    _site_ops,
)

q = LaurentQ.q_power(1)
qinv = LaurentQ.q_power(-1)
SPINS = [HalfInt(1), HalfInt(2), HalfInt(3), HalfInt(4)]


def _chi(x) -> RatQ:
    return RatQ.of(chi(HalfInt.of(x)))


class TestSpinRep:
    def test_k_diagonals(self):
        assert spin_rep(HalfInt(1)).k == RepMatrix.diagonal([q, qinv])
        assert spin_rep(HalfInt(2)).k == RepMatrix.diagonal([q * q, LaurentQ.one(), qinv * qinv])

    @pytest.mark.parametrize("s", SPINS)
    def test_defining_relations(self, s):
        rep = spin_rep(s)
        assert rep.k @ rep.k_inv == RepMatrix.identity(rep.dim)
        assert rep.k @ rep.e == (rep.e @ rep.k).scaled(q * q)
        assert rep.k @ rep.f == (rep.f @ rep.k).scaled(qinv * qinv)
        lhs = commutator(rep.e, rep.f)
        rhs = (rep.k - rep.k_inv).scaled(RatQ.fraction(1, q - qinv))
        assert lhs == rhs

    @pytest.mark.parametrize("s", SPINS)
    def test_one_site_casimir_is_scalar(self, s):
        rep = spin_rep(s)
        cas = casimir_of(_site_ops(rep))
        assert cas == RepMatrix.identity(rep.dim).scaled(chi(s))


class TestCasimir2:
    @pytest.mark.parametrize("s", SPINS)
    def test_annihilating_polynomial(self, s):
        c = casimir2(s)
        prod = mat_product([c.shifted(-_chi(p)) for p in range(s.twice + 1)])
        assert prod.is_zero

    @pytest.mark.parametrize("s", SPINS)
    def test_spectrum_multiplicities(self, s):
        # multiplicity of the spin-j eigenvalue equals 2j+1, read off projector traces
        for j, proj in enumerate(spectral_projectors(s)):
            assert proj.trace() == RatQ.of(2 * j + 1)

    @pytest.mark.parametrize("s", SPINS)
    def test_commutes_with_two_site_action(self, s):
        c = casimir2(s)
        ops = two_site_ops(s)
        for g in (ops.e, ops.f, ops.k):
            assert c.commutes_with(g)


class TestProjectors:
    @pytest.mark.parametrize("s", SPINS)
    def test_orthogonal_resolution(self, s):
        projs = spectral_projectors(s)
        total = RepMatrix.zero(projs[0].dim)
        for r, pr in enumerate(projs):
            total = total + pr
            for p, pp in enumerate(projs):
                expected = pr if p == r else RepMatrix.zero(pr.dim)
                assert pr @ pp == expected
        assert total == RepMatrix.identity(projs[0].dim)

    @pytest.mark.parametrize("s", SPINS)
    def test_casimir_eigenrelation(self, s):
        c = casimir2(s)
        for r, pr in enumerate(spectral_projectors(s)):
            assert c @ pr == pr.scaled(_chi(r))
            assert pr @ c == pr.scaled(_chi(r))


class TestSigmaCheck:
    def test_half_spin_eigenvalues(self):
        projs = spectral_projectors(HalfInt(1))
        assert sigma_check2(HalfInt(1)) == projs[0] + projs[1].scaled(-(q * q))

    @pytest.mark.parametrize("s", SPINS)
    def test_characteristic_equation(self, s):
        sig = sigma_check2(s)
        prod = mat_product([sig.shifted(-RatQ.of(qfactor(p))) for p in range(s.twice + 1)])
        assert prod.is_zero

    @pytest.mark.parametrize("s", SPINS)
    def test_inverse(self, s):
        assert sigma_check2(s) @ sigma_check2_inv(s) == RepMatrix.identity(casimir2(s).dim)


class TestThreeSite:
    @pytest.mark.parametrize("s", SPINS)
    def test_braid_relation(self, s):
        cr = three_site(s)
        assert cr.sig12 @ cr.sig23 @ cr.sig12 == cr.sig23 @ cr.sig12 @ cr.sig23

    # spin 2 is covered by the centralizer-membership check of the acceptance suite
    @pytest.mark.parametrize("s", SPINS[:3])
    def test_everything_centralizes(self, s):
        cr = three_site(s)
        ops = three_site_ops(s)
        for m in (cr.sig12, cr.sig23, cr.c12, cr.c23, cr.c13, cr.c123):
            for g in (ops.e, ops.f, ops.k):
                assert m.commutes_with(g)

    def test_degeneracies_spin_one(self):
        s = HalfInt(2)
        djs = [degeneracy(s, j) for j in halfint_range(j_min(s), HalfInt(3 * s.twice))]
        assert djs == [1, 3, 2, 1]
        assert sum(d * d for d in djs) == 15 == centralizer_dimension(s)

    # spin 2 is covered by the total-casimir-spectrum check of the acceptance suite
    @pytest.mark.parametrize("s", SPINS[:3])
    def test_total_casimir_spectrum(self, s):
        # eigenvalue chi_j with multiplicity d_j (2j+1); read off spectral projectors
        cr = three_site(s)
        labels = list(halfint_range(j_min(s), HalfInt(3 * s.twice)))
        for j in labels:
            factors = []
            denom = RatQ.one()
            for p in labels:
                if p == j:
                    continue
                factors.append(cr.c123.shifted(-_chi(p)))
                denom = denom * (_chi(j) - _chi(p))
            proj = mat_product(factors).scaled(denom.inverse())
            d = degeneracy(s, j)
            assert proj.trace() == RatQ.of(d * (j.twice + 1))

    @pytest.mark.parametrize("s", SPINS)
    def test_dimension_formula_matches_degeneracies(self, s):
        labels = list(halfint_range(j_min(s), HalfInt(3 * s.twice)))
        assert sum(degeneracy(s, j) ** 2 for j in labels) == centralizer_dimension(s)


class TestCommutantDim:
    def test_small_spins_at_two(self):
        assert commutant_dim(HalfInt(1), Fraction(2)) == 5
        assert commutant_dim(HalfInt(2), Fraction(2)) == 15

    def test_three_halves(self):
        assert commutant_dim(HalfInt(3), Fraction(3, 5)) == 34

    def test_bad_specialization_rejected(self):
        with pytest.raises(SpecializationError):
            commutant_dim(HalfInt(1), Fraction(1))
        with pytest.raises(SpecializationError):
            commutant_dim(HalfInt(2), Fraction(-1))
