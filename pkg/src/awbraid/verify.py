"""Cross-verification of the abstract quotient against the matrix centralizer.

Every identity is checked as an exact matrix or exact basis-coordinate
equality; failures carry a witness.  Linear independence at a rational
specialization point certifies independence over the rational-function field
(rank can only drop under specialization), and agreement of abstract and
matrix structure constants certifies the isomorphism at desk scale.
"""

from __future__ import annotations

import dataclasses
import time
from fractions import Fraction
from functools import cache
from typing import Callable, Optional, Sequence

from .elements import (
    BasisKey,
    Element,
    e2_projector,
    g1_element,
    g2_element,
    idempotent,
    one,
    sigma_element,
    std_basis,
    word_normal_form,
)
from .halfint import HalfInt, halfint_range
from .kpoly import KPoly
from .laurent import LaurentQ, chi, qfactor, qint
from .linalg import SpanSolver
from .matrix import RepMatrix, SpecializationError, mat_product, q_commutator
from .paths import Path
from .ratq import RatQ
from .reps import (
    CentralizerRep,
    centralizer_dimension,
    commutant_dim,
    degeneracy,
    j_min,
    three_site,
    three_site_ops,
)
from .rewrite import power_bound
from .special import appendix_limit_check, remark45_multiplicity

#: Specialization ladder: points away from |q| = 1, retried upward on collisions.
SPECIALIZATION_POINTS: tuple[Fraction, ...] = (
    Fraction(3, 5),
    Fraction(7, 3),
    Fraction(5, 2),
    Fraction(7, 5),
    Fraction(9, 4),
)


@dataclasses.dataclass
class CheckReport:
    """One named verification outcome; failures always carry a witness."""

    name: str
    spin: HalfInt
    status: str
    witness: Optional[str] = None
    elapsed: float = 0.0

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError("status must be pass or fail")
        if self.status == "fail" and not self.witness:
            raise ValueError("failures must carry a witness")

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _run_check(name: str, spin: HalfInt, body: Callable[[], Optional[str]]) -> CheckReport:
    start = time.perf_counter()
    witness = body()
    elapsed = time.perf_counter() - start
    if witness is None:
        return CheckReport(name, spin, "pass", None, elapsed)
    return CheckReport(name, spin, "fail", witness, elapsed)


def _matrix_witness(lhs: RepMatrix, rhs: RepMatrix) -> Optional[str]:
    if lhs == rhs:
        return None
    for i in range(lhs.dim):
        cols = set(lhs.rows[i]) | set(rhs.rows[i])
        for j in sorted(cols):
            a, b = lhs.entry(i, j), rhs.entry(i, j)
            if a != b:
                return f"entry ({i},{j}): {a} != {b}"
    return "matrices differ"


def _chi(x) -> RatQ:
    return RatQ.of(chi(HalfInt.of(x)))


# -- core matrix relations -------------------------------------------------------


def verify_core_relations(s: HalfInt, rep: CentralizerRep | None = None) -> list[CheckReport]:
    """All defining and derived identities of the centralizer, as exact matrix equalities."""
    if rep is None:
        return list(_core_relations_cached(s))
    return _core_relations(s, rep)


@cache
def _core_relations_cached(s: HalfInt) -> tuple[CheckReport, ...]:
    return tuple(_core_relations(s, three_site(s)))


def _core_relations(s: HalfInt, cr: CentralizerRep) -> list[CheckReport]:
    two_s = s.twice
    dim = cr.c123.dim
    ident = RepMatrix.identity(dim)
    q = LaurentQ.q_power(1)
    qi = LaurentQ.q_power(-1)
    chi_s, chi_0 = _chi(s), _chi(0)
    reports: list[CheckReport] = []

    def mat_check(name: str, lhs: RepMatrix, rhs: RepMatrix) -> None:
        reports.append(_run_check(name, s, lambda: _matrix_witness(lhs, rhs)))

    mat_check(
        "braid-relation",
        cr.sig12 @ cr.sig23 @ cr.sig12,
        cr.sig23 @ cr.sig12 @ cr.sig23,
    )
    for label, sig in (("12", cr.sig12), ("23", cr.sig23)):
        mat_check(
            f"sigma-characteristic-{label}",
            mat_product([sig.shifted(-RatQ.of(qfactor(p))) for p in range(two_s + 1)]),
            RepMatrix.zero(dim),
        )
    for label, g in (("12", cr.c12), ("23", cr.c23)):
        mat_check(
            f"g-characteristic-{label}",
            mat_product([g.shifted(-_chi(p)) for p in range(two_s + 1)]),
            RepMatrix.zero(dim),
        )
    mat_check(
        "aw-relation",
        q_commutator(cr.c12, cr.c23).scaled(RatQ.fraction(1, q * q - qi * qi)) + cr.c13,
        cr.c123.shifted(chi_s).scaled(chi_s / chi_0),
    )

    def omega_check() -> Optional[str]:
        linear = cr.c12.scaled(q) + cr.c23.scaled(qi) + cr.c13.scaled(q)
        omega = (
            cr.c123.shifted(chi_s).scaled(chi_s) @ linear
            - (cr.c12 @ cr.c12).scaled(q * q)
            - (cr.c23 @ cr.c23).scaled(qi * qi)
            - (cr.c13 @ cr.c13).scaled(q * q)
            - (cr.c12 @ cr.c23 @ cr.c13).scaled(q)
        )
        target = cr.c123 @ cr.c123.shifted(chi_s * chi_s * chi_s) + ident.scaled(
            chi_s * chi_s * 3 - chi_0 * chi_0
        )
        return _matrix_witness(omega, target)

    reports.append(_run_check("omega-value", s, omega_check))

    mat_check(
        "projector-sandwich",
        cr.proj12[0] @ cr.c23 @ cr.proj12[0],
        cr.proj12[0].scaled(chi_s * chi_s / chi_0),
    )
    mat_check(
        "total-casimir-truncation",
        cr.c123.shifted(-chi_s) @ cr.proj12[0],
        RepMatrix.zero(dim),
    )

    def tridiagonality() -> Optional[str]:
        powers = [ident]
        for _ in range(two_s):
            powers.append(powers[-1] @ cr.c23)
        for b in range(two_s):
            for a in range(two_s + 1):
                if not any(abs(a - c) > b for c in range(two_s + 1)):
                    continue
                left = cr.proj12[a] @ powers[b]
                for c in range(two_s + 1):
                    if abs(a - c) <= b:
                        continue
                    if not (left @ cr.proj12[c]).is_zero:
                        return f"proj[{a}] c23^{b} proj[{c}] is nonzero"
        return None

    reports.append(_run_check("tridiagonality", s, tridiagonality))

    def annihilators() -> Optional[str]:
        for a in range(two_s + 1):
            lo = abs(HalfInt.of(a) - s)
            hi = HalfInt.of(a) + s
            factors = [cr.c123.shifted(-_chi(r)) for r in halfint_range(lo, hi)]
            if not (mat_product(factors) @ cr.proj12[a]).is_zero:
                return f"kappa annihilator fails on the level-{a} projector"
        return None

    reports.append(_run_check("kappa-annihilators", s, annihilators))

    mat_check(
        "kappa-characteristic",
        mat_product(
            [cr.c123.shifted(-_chi(r)) for r in halfint_range(j_min(s), HalfInt(3 * two_s))]
        ),
        RepMatrix.zero(dim),
    )
    mat_check(
        "kappa-formula",
        q_commutator(cr.c12, cr.c23).scaled(RatQ.fraction(1, (q - qi) * chi(s)))
        + cr.c13.scaled(chi_0 / chi_s)
        - ident.scaled(chi_s),
        cr.c123,
    )
    mat_check("braid-conjugation-12", cr.sig12 @ cr.sig23 @ cr.c12, cr.c23 @ cr.sig12 @ cr.sig23)
    mat_check("braid-conjugation-23", cr.sig23 @ cr.sig12 @ cr.c23, cr.c12 @ cr.sig23 @ cr.sig12)

    def centralizer_membership() -> Optional[str]:
        ops = three_site_ops(s)
        named = (
            ("sig12", cr.sig12),
            ("sig23", cr.sig23),
            ("c12", cr.c12),
            ("c23", cr.c23),
            ("c13", cr.c13),
            ("c123", cr.c123),
        )
        for mname, m in named:
            for gname, g in (("E", ops.e), ("F", ops.f), ("K", ops.k)):
                if not m.commutes_with(g):
                    return f"{mname} does not commute with the three-site {gname}"
        return None

    reports.append(_run_check("centralizer-membership", s, centralizer_membership))

    def projector_resolution() -> Optional[str]:
        for label, projs in (("12", cr.proj12), ("23", cr.proj23)):
            total = RepMatrix.zero(dim)
            for r, pr in enumerate(projs):
                total = total + pr
                for p, pp in enumerate(projs):
                    expected = pr if p == r else RepMatrix.zero(dim)
                    if pr @ pp != expected:
                        return f"projector family {label}: E({r})E({p}) wrong"
            if total != ident:
                return f"projector family {label} does not resolve the identity"
        return None

    reports.append(_run_check("projector-resolution", s, projector_resolution))

    def spectrum_multiplicities() -> Optional[str]:
        labels = list(halfint_range(j_min(s), HalfInt(3 * two_s)))
        for j in labels:
            factors = []
            denom = RatQ.one()
            for p in labels:
                if p == j:
                    continue
                factors.append(cr.c123.shifted(-_chi(p)))
                denom = denom * (_chi(j) - _chi(p))
            tr = (mat_product(factors).scaled(denom.inverse())).trace()
            expected = RatQ.of(degeneracy(s, j) * (j.twice + 1))
            if tr != expected:
                return f"multiplicity of chi_{j}: trace {tr} != {expected}"
        return None

    reports.append(_run_check("total-casimir-spectrum", s, spectrum_multiplicities))
    return reports


# -- images of the standard basis ---------------------------------------------------


@cache
def basis_images(s: HalfInt) -> tuple[RepMatrix, ...]:
    """Matrix image of each standard-basis key under the centralizer realization."""
    cr = three_site(s)
    two_s = s.twice
    c23_pow = [RepMatrix.identity(cr.c23.dim)]
    c123_pow = [RepMatrix.identity(cr.c123.dim)]
    for _ in range(two_s):
        c23_pow.append(c23_pow[-1] @ cr.c23)
        c123_pow.append(c123_pow[-1] @ cr.c123)
    images = []
    for key in std_basis(s):
        m = cr.proj12[key.a] @ c23_pow[abs(key.a - key.c)] @ cr.proj12[key.c]
        if key.p:
            m = m @ c123_pow[key.p]
        images.append(m)
    return tuple(images)


def element_image(x: Element) -> RepMatrix:
    """Push an abstract element through the standard-basis realization."""
    images = basis_images(x.spin)
    keys = {key: idx for idx, key in enumerate(std_basis(x.spin))}
    out = RepMatrix.zero(images[0].dim)
    for key, v in x.coeffs.items():
        out = out + images[keys[key]].scaled(v)
    return out


def _vectorize(rows: Sequence[dict[int, Fraction]], dim: int) -> dict[int, Fraction]:
    return {i * dim + j: v for i, row in enumerate(rows) for j, v in row.items()}


def _specialized_images(s: HalfInt, q0: Fraction) -> list[list[dict[int, Fraction]]]:
    """Standard-basis images at q0, multiplied out in rational arithmetic."""
    cr = three_site(s)
    two_s = s.twice
    projs = [p.specialize(q0) for p in cr.proj12]
    c23 = cr.c23.specialize(q0)
    c123 = cr.c123.specialize(q0)
    dim = cr.c23.dim
    eye = [{i: Fraction(1)} for i in range(dim)]
    c23_pow = [eye]
    c123_pow = [eye]
    for _ in range(two_s):
        c23_pow.append(_sparse_frac_matmul(c23_pow[-1], c23))
        c123_pow.append(_sparse_frac_matmul(c123_pow[-1], c123))
    images = []
    for key in std_basis(s):
        m = _sparse_frac_matmul(projs[key.a], c23_pow[abs(key.a - key.c)])
        m = _sparse_frac_matmul(m, projs[key.c])
        if key.p:
            m = _sparse_frac_matmul(m, c123_pow[key.p])
        images.append(m)
    return images


def rank_check(s: HalfInt, q0: Fraction) -> int:
    """Rank over Q of the specialized standard-basis images (certifies independence)."""
    from .reps import check_specialization

    check_specialization(s, q0)
    cr = three_site(s)
    solver: SpanSolver[Fraction] = SpanSolver(Fraction(1))
    for image in _specialized_images(s, q0):
        solver.add_row(_vectorize(image, cr.c23.dim))
    return solver.rank


# -- structure constants ---------------------------------------------------------------


@dataclasses.dataclass
class StructureConstants:
    """Multiplication table over the standard basis; closure of the product."""

    spin: HalfInt
    basis: tuple[BasisKey, ...]
    table: dict[tuple[int, int], dict[int, RatQ]]
    method: str
    specialization: Optional[Fraction] = None

    def entry(self, i: int, j: int) -> dict[int, RatQ]:
        return self.table.get((i, j), {})


def structure_constants(
    s: HalfInt, method: str = "abstract", q0: Optional[Fraction] = None
) -> StructureConstants:
    basis = tuple(std_basis(s))
    if method == "abstract":
        return _abstract_structure_constants(s, basis, q0)
    if method == "matrix":
        if s.twice >= 3 and q0 is None:
            raise ValueError("the matrix method needs a specialization point for s >= 3/2")
        return _matrix_structure_constants(s, basis, q0)
    raise ValueError(f"unknown method {method!r}")


def _abstract_structure_constants(
    s: HalfInt, basis: tuple[BasisKey, ...], q0: Optional[Fraction]
) -> StructureConstants:
    index = {key: i for i, key in enumerate(basis)}
    table: dict[tuple[int, int], dict[int, RatQ]] = {}
    for i, k1 in enumerate(basis):
        x = Element.basis_element(s, k1)
        for j, k2 in enumerate(basis):
            if k1.c != k2.a:
                continue
            prod = x @ Element.basis_element(s, k2)
            if prod.is_zero:
                continue
            vec: dict[int, RatQ] = {}
            for key, v in prod.coeffs.items():
                if q0 is not None:
                    v = RatQ.of(v.evaluate(q0))
                if not v.is_zero:
                    vec[index[key]] = v
            if vec:
                table[(i, j)] = vec
    return StructureConstants(s, basis, table, "abstract", q0)


def _matrix_structure_constants(
    s: HalfInt, basis: tuple[BasisKey, ...], q0: Optional[Fraction]
) -> StructureConstants:
    dim = three_site(s).c23.dim
    if q0 is None:
        images = basis_images(s)
        solver: SpanSolver[RatQ] = SpanSolver(RatQ.one())
        vecs = [
            {i * dim + j: v for i, row in enumerate(m.rows) for j, v in row.items()}
            for m in images
        ]
        products = {
            (i, j): {k * dim + l: v for k, row in enumerate((mi @ mj).rows) for l, v in row.items()}
            for i, mi in enumerate(images)
            for j, mj in enumerate(images)
            if basis[i].c == basis[j].a
        }
        wrap = lambda v: v
    else:
        solver = SpanSolver(Fraction(1))
        spec = _specialized_images(s, q0)
        vecs = [_vectorize(rows, dim) for rows in spec]
        products = {}
        for i in range(len(spec)):
            for j in range(len(spec)):
                if basis[i].c != basis[j].a:
                    continue
                prod = _sparse_frac_matmul(spec[i], spec[j])
                products[(i, j)] = _vectorize(prod, dim)
        wrap = lambda v: RatQ.of(v)
    for vec in vecs:
        if not solver.add_row(vec):
            raise ArithmeticError("standard-basis images are not independent; bad specialization")
    table: dict[tuple[int, int], dict[int, RatQ]] = {}
    for (i, j), vec in products.items():
        combo = solver.expand(vec)
        if combo is None:
            raise ArithmeticError(f"product of images {i}, {j} left the span")
        entry = {k: wrap(v) for k, v in combo.items() if v}
        if entry:
            table[(i, j)] = entry
    return StructureConstants(s, basis, table, "matrix", q0)


def _sparse_frac_matmul(
    a: list[dict[int, Fraction]], b: list[dict[int, Fraction]]
) -> list[dict[int, Fraction]]:
    out: list[dict[int, Fraction]] = []
    for row in a:
        acc: dict[int, Fraction] = {}
        for k, va in row.items():
            for j, vb in b[k].items():
                acc[j] = acc.get(j, Fraction(0)) + va * vb
        out.append({j: v for j, v in acc.items() if v})
    return out


def _tables_agree(lhs: StructureConstants, rhs: StructureConstants) -> Optional[str]:
    keys = set(lhs.table) | set(rhs.table)
    for key in sorted(keys):
        le, re = lhs.entry(*key), rhs.entry(*key)
        if set(le) != set(re) or any(le[k] != re[k] for k in le):
            return f"tables differ at basis pair {key}"
    return None


def _int_matrix(rows: list[dict[int, Fraction]]) -> tuple[list[dict[int, int]], int]:
    """Clear denominators matrix-wide: returns (integer rows, common denominator)."""
    from math import gcd

    den = 1
    for row in rows:
        for v in row.values():
            den = den * v.denominator // gcd(den, v.denominator)
    out = [{j: int(v * den) for j, v in row.items()} for row in rows]
    return out, den


def _int_matmul(a: list[dict[int, int]], b: list[dict[int, int]]) -> list[dict[int, int]]:
    out: list[dict[int, int]] = []
    for row in a:
        acc: dict[int, int] = {}
        for k, va in row.items():
            for j, vb in b[k].items():
                acc[j] = acc.get(j, 0) + va * vb
        out.append({j: v for j, v in acc.items() if v})
    return out


def _verify_table_at(s: HalfInt, q0: Fraction, abstract: StructureConstants) -> Optional[str]:
    """Check that the abstract coefficients reproduce every product of specialized images.

    Together with full rank of the images (coefficient uniqueness) this pins the
    matrix structure constants without a linear solve per product.
    """
    from math import gcd

    if rank_check(s, q0) != len(abstract.basis):
        return f"images are dependent at q0 = {q0}"
    spec = _specialized_images(s, q0)
    ints = [_int_matrix(m) for m in spec]
    basis = abstract.basis
    for i, (mi, di) in enumerate(ints):
        for j, (mj, dj) in enumerate(ints):
            if basis[i].c != basis[j].a:
                continue
            prod = _int_matmul(mi, mj)
            combo = abstract.entry(i, j)
            # prod/(di dj) must equal sum_k g_k * image_k with g_k = coeff_k / d_k
            scaled: dict[int, Fraction] = {
                k: v.evaluate(q0) / ints[k][1] for k, v in combo.items()
            }
            lhs_scale = 1
            for g in scaled.values():
                lhs_scale = lhs_scale * g.denominator // gcd(lhs_scale, g.denominator)
            acc: list[dict[int, int]] = [dict() for _ in range(len(prod))]
            for k, g in scaled.items():
                mk, _ = ints[k]
                mult = int(g * lhs_scale)
                if not mult:
                    continue
                for r, row in enumerate(mk):
                    arow = acc[r]
                    for c, v in row.items():
                        nv = arow.get(c, 0) + mult * v
                        if nv:
                            arow[c] = nv
                        else:
                            arow.pop(c, None)
            # compare lhs_scale * prod with (di dj) * acc
            rhs_scale = di * dj
            for r in range(len(prod)):
                prow, arow = prod[r], acc[r]
                if set(prow) != set(arow):
                    return f"support mismatch in product ({i},{j}) at q0 = {q0}"
                for c, v in prow.items():
                    if v * lhs_scale != arow[c] * rhs_scale:
                        return f"coefficient mismatch in product ({i},{j}) at q0 = {q0}"
    return None


def crosscheck(s: HalfInt) -> CheckReport:
    """Abstract vs matrix structure constants: exact for s <= 1, two points above.

    For the larger spins the matrix-side table is pinned by coefficient
    uniqueness: the specialized images have full rank, so verifying that the
    abstract coefficients reproduce every image product identifies the tables.
    """

    def body() -> Optional[str]:
        if s.twice <= 2:
            return _tables_agree(
                structure_constants(s, "abstract"), structure_constants(s, "matrix")
            )
        for q0 in _usable_points(s, 2):
            witness = _verify_table_at(s, q0, structure_constants(s, "abstract", q0))
            if witness:
                return witness
        return None

    return _run_check("crosscheck", s, body)


def _usable_points(s: HalfInt, count: int) -> list[Fraction]:
    from .reps import check_specialization

    points = []
    for q0 in SPECIALIZATION_POINTS:
        try:
            check_specialization(s, q0)
        except SpecializationError:
            continue
        points.append(q0)
        if len(points) == count:
            return points
    raise SpecializationError("the specialization ladder is exhausted")


# -- Temperley-Lieb and BMW recoveries ---------------------------------------------------


def tl_check() -> list[CheckReport]:
    """At spin 1/2 the quotient is the three-strand Temperley-Lieb algebra."""
    s = HalfInt(1)
    q = LaurentQ.q_power(1)
    qi = LaurentQ.q_power(-1)
    chi_0 = _chi(0)
    reports: list[CheckReport] = []

    def elem_check(name: str, lhs: Element, rhs: Element) -> None:
        reports.append(
            _run_check(name, s, lambda: None if lhs == rhs else f"{lhs} != {rhs}")
        )

    e_hat = [idempotent(s, 0).scaled(chi_0), e2_projector(s, 0).scaled(chi_0)]
    sigmas = [sigma_element(1, 1, s), sigma_element(2, 1, s)]
    gs = [g1_element(s), g2_element(s)]
    for i in (0, 1):
        elem_check(f"tl-idempotent-square-{i + 1}", e_hat[i] @ e_hat[i], e_hat[i].scaled(chi_0))
    elem_check("tl-sandwich-121", e_hat[0] @ e_hat[1] @ e_hat[0], e_hat[0])
    elem_check("tl-sandwich-212", e_hat[1] @ e_hat[0] @ e_hat[1], e_hat[1])
    for i in (0, 1):
        elem_check(
            f"tl-sigma-image-{i + 1}",
            sigmas[i],
            one(s).scaled(-(q * q)) + e_hat[i].scaled(q),
        )
        elem_check(
            f"tl-g-image-{i + 1}",
            gs[i],
            one(s).scaled(LaurentQ.q_power(3) + LaurentQ.q_power(-3))
            - e_hat[i].scaled((q - qi) * (q - qi)),
        )

    # the same identities must hold for the matrix realizations
    cr = three_site(s)
    ehat_m = [cr.proj12[0].scaled(chi_0), cr.proj23[0].scaled(chi_0)]
    sig_m = [cr.sig12, cr.sig23]
    g_m = [cr.c12, cr.c23]
    ident = RepMatrix.identity(cr.c12.dim)

    def matrix_check(name: str, lhs: RepMatrix, rhs: RepMatrix) -> None:
        reports.append(_run_check(name, s, lambda: _matrix_witness(lhs, rhs)))

    for i in (0, 1):
        matrix_check(
            f"tl-matrix-idempotent-square-{i + 1}",
            ehat_m[i] @ ehat_m[i],
            ehat_m[i].scaled(chi_0),
        )
    matrix_check("tl-matrix-sandwich-121", ehat_m[0] @ ehat_m[1] @ ehat_m[0], ehat_m[0])
    matrix_check("tl-matrix-sandwich-212", ehat_m[1] @ ehat_m[0] @ ehat_m[1], ehat_m[1])
    for i in (0, 1):
        matrix_check(
            f"tl-matrix-sigma-image-{i + 1}",
            sig_m[i],
            ident.scaled(-(q * q)) + ehat_m[i].scaled(q),
        )
        matrix_check(
            f"tl-matrix-g-image-{i + 1}",
            g_m[i],
            ident.scaled(LaurentQ.q_power(3) + LaurentQ.q_power(-3))
            - ehat_m[i].scaled((q - qi) * (q - qi)),
        )
    return reports


def bmw_check() -> list[CheckReport]:
    """At spin 1 the quotient is the three-strand BMW algebra with both parameters squared."""
    s = HalfInt(2)
    q = LaurentQ.q_power(1)
    mu = RatQ.of(LaurentQ.q_power(4))
    mu_inv = mu.inverse()
    bracket = RatQ.of(LaurentQ.q_power(2) - LaurentQ.q_power(-2))
    chi_0 = _chi(0)
    reports: list[CheckReport] = []

    def elem_check(name: str, lhs: Element, rhs: Element) -> None:
        reports.append(
            _run_check(name, s, lambda: None if lhs == rhs else f"{lhs} != {rhs}")
        )

    s_hat = [sigma_element(1, 1, s).scaled(mu_inv), sigma_element(2, 1, s).scaled(mu_inv)]
    s_hat_inv = [sigma_element(1, -1, s).scaled(mu), sigma_element(2, -1, s).scaled(mu)]
    e_hat = [
        one(s) - (s_hat[i] - s_hat_inv[i]).scaled(bracket.inverse()) for i in (0, 1)
    ]
    e_proj = [idempotent(s, 0), e2_projector(s, 0)]
    three = RatQ.of(qint(3))

    for i in (0, 1):
        elem_check(f"bmw-inverse-{i + 1}", s_hat[i] @ s_hat_inv[i], one(s))
    elem_check(
        "bmw-braid", s_hat[0] @ s_hat[1] @ s_hat[0], s_hat[1] @ s_hat[0] @ s_hat[1]
    )
    for i in (0, 1):
        elem_check(f"bmw-projector-match-{i + 1}", e_hat[i], e_proj[i].scaled(three))
        elem_check(f"bmw-tangle-left-{i + 1}", e_hat[i] @ s_hat[i], e_hat[i].scaled(mu_inv))
        elem_check(f"bmw-tangle-right-{i + 1}", s_hat[i] @ e_hat[i], e_hat[i].scaled(mu_inv))
    for eps, scale in ((1, mu), (-1, mu_inv)):
        other = s_hat if eps == 1 else s_hat_inv
        elem_check(
            f"bmw-loop-121-eps{eps}", e_hat[0] @ other[1] @ e_hat[0], e_hat[0].scaled(scale)
        )
        elem_check(
            f"bmw-loop-212-eps{eps}", e_hat[1] @ other[0] @ e_hat[1], e_hat[1].scaled(scale)
        )
    qm2 = RatQ.of(LaurentQ.q_power(-2))
    qinv_chi0 = RatQ.of(LaurentQ.q_power(-1)) * chi_0
    factor = chi_0 * RatQ.of((q - LaurentQ.q_power(-1)) * (q - LaurentQ.q_power(-1)))
    gs = [g1_element(s), g2_element(s)]
    for i in (0, 1):
        inner = s_hat[i] - e_hat[i].scaled(qm2) + one(s).scaled(qinv_chi0)
        elem_check(f"bmw-g-image-{i + 1}", gs[i], inner.scaled(factor) + one(s).scaled(chi_0))
    return reports


# -- the aggregated suite ------------------------------------------------------------------


def full_suite(s: HalfInt) -> list[CheckReport]:
    """Every verification for one spin, in a fixed declared order."""
    if s.twice not in (1, 2, 3, 4):
        raise ValueError("the suite runs at desk scale: spin 1/2, 1, 3/2 or 2")
    reports = list(verify_core_relations(s))
    expected_dim = centralizer_dimension(s)
    points = _usable_points(s, 2)

    for q0 in points:
        reports.append(
            _run_check(
                f"rank-at-{q0}",
                s,
                lambda q0=q0: None
                if rank_check(s, q0) == expected_dim
                else f"rank at {q0} is not {expected_dim}",
            )
        )
    for q0 in points:
        reports.append(
            _run_check(
                f"commutant-dim-at-{q0}",
                s,
                lambda q0=q0: (
                    lambda got: None
                    if got == expected_dim
                    else f"commutant dimension {got} != {expected_dim}"
                )(commutant_dim(s, q0)),
            )
        )
    reports.append(crosscheck(s))
    reports.append(
        _run_check(
            "remark45-multiplicity",
            s,
            lambda: (
                lambda got: None if got == 1 else f"(kappa - chi_s) multiplicity is {got}"
            )(remark45_multiplicity(s)),
        )
    )
    for a in range(s.twice + 1):
        if HalfInt.of(a) > s:
            reports.append(
                _run_check(
                    f"appendix-limit-a{a}",
                    s,
                    lambda a=a: (
                        lambda rep: None
                        if rep.passed
                        else f"limit check failed: equal={rep.equal}, nonzero={rep.nonzero}"
                    )(appendix_limit_check(a, s)),
                )
            )
    if s.twice == 1:
        reports.extend(tl_check())
    if s.twice == 2:
        reports.extend(bmw_check())
    return reports


CHECK_GROUPS = {
    "core": verify_core_relations,
    "crosscheck": lambda s: [crosscheck(s)],
    "tl": lambda s: tl_check(),
    "bmw": lambda s: bmw_check(),
}


def named_checks(s: HalfInt, name: str) -> list[CheckReport]:
    """Run one named check group, or every report whose name matches exactly."""
    if name in CHECK_GROUPS:
        if name == "tl" and s.twice != 1:
            raise ValueError("the Temperley-Lieb checks run at spin 1/2")
        if name == "bmw" and s.twice != 2:
            raise ValueError("the BMW checks run at spin 1")
        return CHECK_GROUPS[name](s)
    matches = [r for r in full_suite(s) if r.name == name]
    if not matches:
        raise ValueError(f"no check named {name!r}")
    return matches
