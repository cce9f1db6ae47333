"""Oracle layer: basis images, ranks, core relations, structure constants, TL/BMW."""

import dataclasses
from fractions import Fraction

import pytest

from awbraid.elements import BasisKey, Element, one, sigma_element, std_basis
from awbraid.halfint import HalfInt
from awbraid.laurent import LaurentQ, chi
from awbraid.matrix import RepMatrix
from awbraid.ratq import RatQ
from awbraid.reps import three_site
from awbraid.verify import (
    CheckReport,
    basis_images,
    bmw_check,
    crosscheck,
    element_image,
    rank_check,
    structure_constants,
    tl_check,
    verify_core_relations,
)

HALF = HalfInt(1)
ONE = HalfInt(2)


class TestCheckReport:
    def test_failure_requires_witness(self):
        with pytest.raises(ValueError):
            CheckReport("x", HALF, "fail")
        with pytest.raises(ValueError):
            CheckReport("x", HALF, "maybe")
        assert CheckReport("x", HALF, "pass").passed


class TestBasisImages:
    def test_half_spin_images(self):
        images = basis_images(HALF)
        assert len(images) == 5
        assert all(m.dim == 8 for m in images)
        # the first key (0,0,0) maps to an idempotent
        first = images[0]
        assert first @ first == first

    def test_flat_sandwich_reproduces_tau_relation(self):
        # E(a) C23 E(a) relates to the image of key (a,a,*) through tau
        from awbraid.rewrite import tau_poly

        cr = three_site(HALF)
        keys = std_basis(HALF)
        images = dict(zip(keys, basis_images(HALF)))
        for a in (0, 1):
            sandwich = cr.proj12[a] @ cr.c23 @ cr.proj12[a]
            tau = tau_poly(a, HALF)
            expected = RepMatrix.zero(8)
            from awbraid.rewrite import kappa_annihilator
            from awbraid.kpoly import kpoly_rem

            poly = kpoly_rem(tau, kappa_annihilator(a, a, HALF)) if tau.degree >= kappa_annihilator(a, a, HALF).degree else tau
            for p, cv in enumerate(poly.coeffs):
                expected = expected + images[BasisKey(a, a, p)].scaled(cv)
            assert sandwich == expected

    @pytest.mark.parametrize("s", [HALF, ONE])
    def test_sigma_images_match(self, s):
        cr = three_site(s)
        assert element_image(sigma_element(1, 1, s)) == cr.sig12
        assert element_image(sigma_element(2, 1, s)) == cr.sig23
        assert element_image(one(s)) == RepMatrix.identity(cr.c23.dim)


class TestRank:
    def test_desk_scale_ranks(self):
        assert rank_check(HALF, Fraction(2)) == 5
        assert rank_check(ONE, Fraction(2)) == 15


class TestCoreRelations:
    @pytest.mark.parametrize("s", [HALF, ONE])
    def test_all_pass(self, s):
        reports = verify_core_relations(s)
        assert len(reports) == 18
        assert all(r.passed for r in reports)

    def test_perturbation_is_caught(self):
        cr = three_site(HALF)
        bad_c23 = cr.c23.shifted(RatQ.of(LaurentQ.q_power(5)))
        broken = dataclasses.replace(cr, c23=bad_c23)
        reports = verify_core_relations(HALF, rep=broken)
        failed = [r for r in reports if not r.passed]
        assert failed
        assert all(r.witness for r in failed)


class TestStructureConstants:
    def test_orthogonality_of_cells(self):
        sc = structure_constants(HALF, "abstract")
        index = {k: i for i, k in enumerate(sc.basis)}
        i = index[BasisKey(0, 0, 0)]
        j = index[BasisKey(1, 1, 0)]
        assert sc.entry(i, j) == {}

    def test_unit_acts_as_identity(self):
        sc = structure_constants(HALF, "abstract")
        index = {k: i for i, k in enumerate(sc.basis)}
        unit = one(HALF)
        for j, key in enumerate(sc.basis):
            total: dict[int, RatQ] = {}
            for ukey, uval in unit.coeffs.items():
                entry = sc.entry(index[ukey], j)
                for k, v in entry.items():
                    cur = total.get(k, RatQ.zero()) + v * uval
                    if cur.is_zero:
                        total.pop(k, None)
                    else:
                        total[k] = cur
            assert total == {j: RatQ.one()}

    def test_methods_agree_exactly_at_half_spin(self):
        ab = structure_constants(HALF, "abstract")
        mat = structure_constants(HALF, "matrix")
        assert set(ab.table) == set(mat.table)
        for key in ab.table:
            assert ab.table[key] == mat.table[key]

    def test_matrix_method_needs_point_for_large_spin(self):
        with pytest.raises(ValueError):
            structure_constants(HalfInt(3), "matrix")

    def test_specialized_methods_agree_at_half_spin(self):
        q0 = Fraction(3, 5)
        ab = structure_constants(HALF, "abstract", q0)
        mat = structure_constants(HALF, "matrix", q0)
        assert set(ab.table) == set(mat.table)
        for key in ab.table:
            assert ab.table[key] == mat.table[key]


class TestCrosscheck:
    @pytest.mark.parametrize("s", [HALF, ONE])
    def test_small_spins(self, s):
        assert crosscheck(s).passed


class TestTLBMW:
    def test_tl(self):
        reports = tl_check()
        assert len(reports) == 16
        assert all(r.passed for r in reports), [r.name for r in reports if not r.passed]

    def test_bmw(self):
        reports = bmw_check()
        assert len(reports) == 15
        assert all(r.passed for r in reports), [r.name for r in reports if not r.passed]
