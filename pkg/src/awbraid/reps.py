"""Exact matrix realizations of the spin-s tower: generators, Casimirs, projectors.

Conventions (validated by the test suite, not assumed): on the weight basis
v_0..v_2s the raising operator sends v_k to [k] v_(k-1), the lowering operator
sends v_k to [2s-k] v_(k+1), and the grouplike generator scales v_k by
q^(2s-2k).  The coproduct splits the raising operator as E(x)1 + K(x)E and the
lowering one as F(x)K^-1 + 1(x)F.  The one-site Casimir
(q - q^-1)^2 FE + qK + q^-1 K^-1 acts on the spin-j summand as the bracket
value chi_j, which pins every spectral computation downstream.

The normalized braid operator is built spectrally from the two-site Casimir
(eigenvalue q_r on the spin-r summand), so the coefficient field never leaves
Q(q): the scalar that relates it to the categorical braiding is never needed.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from functools import cache
from typing import Sequence

from .halfint import HalfInt, halfint_range
from .laurent import LaurentQ, chi, qfactor, qint
from .linalg import sparse_nullity
from .matrix import RepMatrix, SpecializationError, mat_product
from .ratq import RatQ


@dataclasses.dataclass(frozen=True)
class SpinRep:
    """The (2s+1)-dimensional irreducible representation in the weight basis."""

    s: HalfInt
    e: RepMatrix
    f: RepMatrix
    k: RepMatrix
    k_inv: RepMatrix

    @property
    def dim(self) -> int:
        return self.s.twice + 1


@dataclasses.dataclass(frozen=True)
class SiteOps:
    """Generator images on a tensor power, with the identity kept alongside."""

    e: RepMatrix
    f: RepMatrix
    k: RepMatrix
    k_inv: RepMatrix

    @property
    def dim(self) -> int:
        return self.e.dim


@dataclasses.dataclass(frozen=True)
class CentralizerRep:
    """All centralizer generators on three tensor factors, exactly over Q(q)."""

    s: HalfInt
    sig12: RepMatrix
    sig23: RepMatrix
    sig12_inv: RepMatrix
    sig23_inv: RepMatrix
    c12: RepMatrix
    c23: RepMatrix
    c13: RepMatrix
    c123: RepMatrix
    proj12: tuple[RepMatrix, ...]
    proj23: tuple[RepMatrix, ...]


def j_min(s: HalfInt) -> HalfInt:
    return HalfInt(0) if s.is_integer else HalfInt(1)


def degeneracy(s: HalfInt, j: HalfInt) -> int:
    """Multiplicity of the spin-j summand in three tensor factors of spin s."""
    two = min(2 * s, s + j)
    return ((two - abs(s - j)).as_int()) + 1


def centralizer_dimension(s: HalfInt) -> int:
    n = s.twice + 1
    total = n * (n * n + 1)
    assert total % 2 == 0
    return total // 2


def sandwich_power_bound(s: HalfInt, a: int, c: int) -> int:
    """Largest independent kappa power on the (a, c) cell of the standard basis."""
    two_s = s.twice
    if a + c <= two_s:
        return 2 * min(a, c)
    return two_s - abs(a - c)


@cache
def spin_rep(s: HalfInt) -> SpinRep:
    two_s = s.twice
    if two_s < 1:
        raise ValueError("the spin must be at least 1/2")
    dim = two_s + 1
    e = RepMatrix(dim)
    f = RepMatrix(dim)
    k = RepMatrix(dim)
    k_inv = RepMatrix(dim)
    for idx in range(dim):
        if idx >= 1:
            e.rows[idx - 1][idx] = RatQ.of(qint(idx))
        if idx + 1 < dim:
            f.rows[idx + 1][idx] = RatQ.of(qint(two_s - idx))
        w = two_s - 2 * idx
        k.rows[idx][idx] = RatQ.of(LaurentQ.q_power(w))
        k_inv.rows[idx][idx] = RatQ.of(LaurentQ.q_power(-w))
    return SpinRep(s, e, f, k, k_inv)


def casimir_of(ops: SiteOps) -> RepMatrix:
    """(q - q^-1)^2 FE + qK + q^-1 K^-1 on whatever ops act on."""
    qq = LaurentQ.q_power(1) - LaurentQ.q_power(-1)
    return (
        (ops.f @ ops.e).scaled(qq * qq)
        + ops.k.scaled(LaurentQ.q_power(1))
        + ops.k_inv.scaled(LaurentQ.q_power(-1))
    )


def _coproduct(a: SiteOps, b: SiteOps) -> SiteOps:
    ida = RepMatrix.identity(a.dim)
    idb = RepMatrix.identity(b.dim)
    return SiteOps(
        e=a.e.kron(idb) + a.k.kron(b.e),
        f=a.f.kron(b.k_inv) + ida.kron(b.f),
        k=a.k.kron(b.k),
        k_inv=a.k_inv.kron(b.k_inv),
    )


def _site_ops(rep: SpinRep) -> SiteOps:
    return SiteOps(rep.e, rep.f, rep.k, rep.k_inv)


@cache
def two_site_ops(s: HalfInt) -> SiteOps:
    one = _site_ops(spin_rep(s))
    return _coproduct(one, one)


@cache
def three_site_ops(s: HalfInt) -> SiteOps:
    """Generator images on three factors; both coassociativity orders must agree."""
    one = _site_ops(spin_rep(s))
    left = _coproduct(two_site_ops(s), one)
    right = _coproduct(one, two_site_ops(s))
    if (left.e, left.f, left.k) != (right.e, right.f, right.k):
        raise AssertionError("the two coproduct orders disagree; tensor bookkeeping is broken")
    return left


@cache
def casimir2(s: HalfInt) -> RepMatrix:
    return casimir_of(two_site_ops(s))


@cache
def spectral_projectors(s: HalfInt) -> tuple[RepMatrix, ...]:
    """Projectors onto the spin-r summands of a two-site product, by the product formula."""
    c = casimir2(s)
    two_s = s.twice
    labels = list(range(two_s + 1))
    projs = []
    for r in labels:
        factors = []
        denom = RatQ.one()
        for p in labels:
            if p == r:
                continue
            factors.append(c.shifted(-RatQ.of(chi(HalfInt.of(p)))))
            denom = denom * (RatQ.of(chi(HalfInt.of(r))) - RatQ.of(chi(HalfInt.of(p))))
        if factors:
            projs.append(mat_product(factors).scaled(denom.inverse()))
        else:
            projs.append(RepMatrix.identity(c.dim))
    return tuple(projs)


@cache
def sigma_check2(s: HalfInt) -> RepMatrix:
    projs = spectral_projectors(s)
    out = RepMatrix.zero(projs[0].dim)
    for r, proj in enumerate(projs):
        out = out + proj.scaled(qfactor(r))
    return out


@cache
def sigma_check2_inv(s: HalfInt) -> RepMatrix:
    projs = spectral_projectors(s)
    out = RepMatrix.zero(projs[0].dim)
    for r, proj in enumerate(projs):
        out = out + proj.scaled(RatQ.of(qfactor(r)).inverse())
    return out


@cache
def three_site(s: HalfInt) -> CentralizerRep:
    rep = spin_rep(s)
    dim1 = rep.dim
    id1 = RepMatrix.identity(dim1)
    c = casimir2(s)
    sig = sigma_check2(s)
    sig_inv = sigma_check2_inv(s)
    projs = spectral_projectors(s)

    sig12 = sig.kron(id1)
    sig12_inv = sig_inv.kron(id1)
    sig23 = id1.kron(sig)
    sig23_inv = id1.kron(sig_inv)
    c12 = c.kron(id1)
    c23 = id1.kron(c)
    c13 = sig12 @ c23 @ sig12_inv
    c123 = casimir_of(three_site_ops(s))
    proj12 = tuple(p.kron(id1) for p in projs)
    proj23 = tuple(id1.kron(p) for p in projs)
    return CentralizerRep(
        s=s,
        sig12=sig12,
        sig23=sig23,
        sig12_inv=sig12_inv,
        sig23_inv=sig23_inv,
        c12=c12,
        c23=c23,
        c13=c13,
        c123=c123,
        proj12=proj12,
        proj23=proj23,
    )


# -- dimension of the commuting algebra at a rational specialization -------------


def check_specialization(s: HalfInt, q0: Fraction) -> None:
    """Reject points where bracket values or weight values collide."""
    if q0 == 0 or q0 == 1 or q0 == -1:
        raise SpecializationError(f"q0 = {q0} collapses the weight spectrum")
    values: dict[Fraction, HalfInt] = {}
    for j in halfint_range(HalfInt(0), HalfInt(3 * s.twice)):
        v = chi(j).evaluate(q0)
        if v in values:
            raise SpecializationError(f"chi collision at q0 = {q0} between {values[v]} and {j}")
        values[v] = j


def _twice_weights(s: HalfInt) -> list[int]:
    """Doubled weight of each tensor-basis vector of the three-site space."""
    two_s = s.twice
    dim1 = two_s + 1
    weights = []
    for k1 in range(dim1):
        for k2 in range(dim1):
            for k3 in range(dim1):
                weights.append(3 * two_s - 2 * (k1 + k2 + k3))
    return weights


def commutant_dim(s: HalfInt, q0: Fraction) -> int:
    """Dimension over Q of the joint commutant of the three-site generator images at q0.

    The grouplike constraint forces weight-block-diagonal unknowns (its diagonal
    values are pairwise distinct away from q0 = 0, +-1); the raising and lowering
    constraints then form a sparse homogeneous system whose null space is
    eliminated exactly.
    """
    check_specialization(s, q0)
    ops = three_site_ops(s)
    weights = _twice_weights(s)
    by_weight: dict[int, list[int]] = {}
    for i, w in enumerate(weights):
        by_weight.setdefault(w, []).append(i)

    var_index: dict[tuple[int, int], int] = {}
    for w, idxs in by_weight.items():
        for i in idxs:
            for j in idxs:
                var_index[(i, j)] = len(var_index)

    rows: list[dict[int, Fraction]] = []
    for mat, step in ((ops.e, 2), (ops.f, -2)):
        x_rows = mat.specialize(q0)
        x_cols: list[dict[int, Fraction]] = [{} for _ in range(mat.dim)]
        for i, row in enumerate(x_rows):
            for j, v in row.items():
                x_cols[j][i] = v
        for w, low_idxs in by_weight.items():
            high_idxs = by_weight.get(w + step)
            if not high_idxs:
                continue
            # equation block [M, X] = 0 between weights w and w + step
            for i in high_idxs:
                for j in low_idxs:
                    eq: dict[int, Fraction] = {}
                    for k, xv in x_cols[j].items():
                        var = var_index.get((i, k))
                        if var is not None:
                            eq[var] = eq.get(var, Fraction(0)) + xv
                    for k, xv in x_rows[i].items():
                        var = var_index.get((k, j))
                        if var is not None:
                            eq[var] = eq.get(var, Fraction(0)) - xv
                    if eq:
                        rows.append(eq)
    return sparse_nullity(rows, len(var_index))
