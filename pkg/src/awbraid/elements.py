"""Elements of the finite-dimensional quotient algebra in the standard basis.

The standard basis consists of the keys (a, c, p) standing for
e1(a) g2^|a-c| e1(c) kappa^p with 0 <= p <= n(a, c).  Products contract via the
path rewriting rules and are remaindered by the endpoint kappa-annihilator, so
every Element stays in reduced coordinates.  Braid generators enter through
their spectral decompositions: sigma_1 is diagonal in the keys, sigma_2 is the
interpolation polynomial in g2 pushed through the sandwich expansion.
"""

from __future__ import annotations

import dataclasses
from functools import cache
from typing import Iterable, Mapping, Sequence, Union

from .halfint import HalfInt
from .kpoly import KPoly, kpoly_rem
from .laurent import LaurentQ, chi, qfactor
from .paths import Path, cell_paths, monotone_path
from .ratq import RatQ, Scalar
from .rewrite import expand_sandwich, kappa_annihilator, power_bound, reduce_path

CoeffLike = Union[RatQ, LaurentQ, Scalar]


@dataclasses.dataclass(frozen=True, order=True)
class BasisKey:
    """Standard-basis label (a, c, p) for e1(a) g2^|a-c| e1(c) kappa^p."""

    a: int
    c: int
    p: int

    def validate(self, s: HalfInt) -> None:
        two_s = s.twice
        if not (0 <= self.a <= two_s and 0 <= self.c <= two_s):
            raise ValueError(f"levels of {self} exceed 2s = {two_s}")
        if not 0 <= self.p <= power_bound(self.a, self.c, s):
            raise ValueError(f"kappa power of {self} exceeds n(a, c)")


class SpinMismatchError(ValueError):
    """Two elements of different spins cannot be combined."""


class Element:
    """A finite RatQ combination of standard-basis keys at a fixed spin."""

    __slots__ = ("spin", "coeffs")

    def __init__(self, spin: HalfInt, coeffs: Mapping[BasisKey, CoeffLike] | None = None):
        self.spin = spin
        cs: dict[BasisKey, RatQ] = {}
        if coeffs:
            for key, v in coeffs.items():
                rv = RatQ.of(v)
                if not rv.is_zero:
                    key.validate(spin)
                    cs[key] = rv
        self.coeffs = cs

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(spin: HalfInt) -> Element:
        return Element(spin)

    @staticmethod
    def from_terms(spin: HalfInt, terms: Iterable[tuple[int, int, int, CoeffLike]]) -> Element:
        """Build from (a, c, p, coeff) tuples, auto-remaindering out-of-range powers."""
        acc: dict[BasisKey, RatQ] = {}
        for a, c, p, coeff in terms:
            rv = RatQ.of(coeff)
            if rv.is_zero:
                continue
            bound = power_bound(a, c, spin)
            if p <= bound:
                pieces = [(p, rv)]
            else:
                reduced = kpoly_rem(KPoly.one().shift(p), kappa_annihilator(a, c, spin))
                pieces = [(i, cv * rv) for i, cv in enumerate(reduced.coeffs)]
            for i, cv in pieces:
                if cv.is_zero:
                    continue
                key = BasisKey(a, c, i)
                cur = acc.get(key)
                val = cv if cur is None else cur + cv
                if val.is_zero:
                    acc.pop(key, None)
                else:
                    acc[key] = val
        return Element(spin, acc)

    @staticmethod
    def basis_element(spin: HalfInt, key: BasisKey, coeff: CoeffLike = 1) -> Element:
        return Element(spin, {key: RatQ.of(coeff)})

    # -- structure --------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.spin == other.spin and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.spin, tuple(sorted(self.coeffs.items(), key=lambda kv: kv[0]))))

    def terms(self) -> list[tuple[BasisKey, RatQ]]:
        return sorted(self.coeffs.items(), key=lambda kv: kv[0])

    def coeff(self, key: BasisKey) -> RatQ:
        return self.coeffs.get(key, RatQ.zero())

    # -- linear structure ----------------------------------------------------------

    def _check(self, other: Element) -> None:
        if self.spin != other.spin:
            raise SpinMismatchError(f"spin {self.spin} vs {other.spin}")

    def __add__(self, other: Element) -> Element:
        self._check(other)
        out = dict(self.coeffs)
        for key, v in other.coeffs.items():
            cur = out.get(key)
            val = v if cur is None else cur + v
            if val.is_zero:
                out.pop(key, None)
            else:
                out[key] = val
        e = Element.__new__(Element)
        e.spin = self.spin
        e.coeffs = out
        return e

    def __neg__(self) -> Element:
        e = Element.__new__(Element)
        e.spin = self.spin
        e.coeffs = {k: -v for k, v in self.coeffs.items()}
        return e

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def scaled(self, c: CoeffLike) -> Element:
        cv = RatQ.of(c)
        if cv.is_zero:
            return Element.zero(self.spin)
        e = Element.__new__(Element)
        e.spin = self.spin
        e.coeffs = {k: v * cv for k, v in self.coeffs.items()}
        return e

    # -- multiplication ---------------------------------------------------------

    def __matmul__(self, other: Element) -> Element:
        self._check(other)
        s = self.spin
        acc: dict[BasisKey, RatQ] = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                if k1.c != k2.a:
                    continue
                v = v1 * v2
                base = _cell_product(s, k1.a, k1.c, k2.c)
                total_p = k1.p + k2.p
                poly = base.shift(total_p)
                ann = kappa_annihilator(k1.a, k2.c, s)
                if poly.degree >= ann.degree:
                    poly = kpoly_rem(poly, ann)
                for i, cv in enumerate(poly.coeffs):
                    if cv.is_zero:
                        continue
                    key = BasisKey(k1.a, k2.c, i)
                    cur = acc.get(key)
                    val = cv * v if cur is None else cur + cv * v
                    if val.is_zero:
                        acc.pop(key, None)
                    else:
                        acc[key] = val
        e = Element.__new__(Element)
        e.spin = s
        e.coeffs = acc
        return e

    def __pow__(self, n: int) -> Element:
        if n < 0:
            raise ValueError("negative powers are not defined on generic elements")
        out = one(self.spin)
        for _ in range(n):
            out = out @ self
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for key, v in self.terms():
            parts.append(f"({v})*[{key.a},{key.c},{key.p}]")
        return " + ".join(parts)

    __repr__ = __str__


def multiply(x: Element, y: Element) -> Element:
    return x @ y


@cache
def _cell_product(s: HalfInt, a: int, c: int, d: int) -> KPoly:
    """Raw contraction polynomial of the glued monotone paths a -> c -> d."""
    glued = monotone_path(a, c).concat(monotone_path(c, d))
    return reduce_path(glued, s, mode="raw")


# -- distinguished elements --------------------------------------------------------


@cache
def one(s: HalfInt) -> Element:
    return Element(s, {BasisKey(a, a, 0): RatQ.one() for a in range(s.twice + 1)})


def idempotent(s: HalfInt, a: int) -> Element:
    return Element.basis_element(s, BasisKey(a, a, 0))


@cache
def g1_element(s: HalfInt) -> Element:
    return Element(s, {BasisKey(a, a, 0): RatQ.of(chi(HalfInt.of(a))) for a in range(s.twice + 1)})


@cache
def kappa_element(s: HalfInt) -> Element:
    return Element.from_terms(s, [(a, a, 1, RatQ.one()) for a in range(s.twice + 1)])


def element_from_g2_poly(s: HalfInt, coeffs: Sequence[RatQ]) -> Element:
    """The element sum_n coeffs[n] g2^n, pushed through the sandwich expansion."""
    two_s = s.twice
    terms: list[tuple[int, int, int, RatQ]] = []
    for a in range(two_s + 1):
        for c in range(two_s + 1):
            poly = KPoly.zero()
            for n, beta in enumerate(coeffs):
                if beta.is_zero:
                    continue
                poly = poly + expand_sandwich(a, n, c, s) * beta
            ann = kappa_annihilator(a, c, s)
            if poly.degree >= ann.degree:
                poly = kpoly_rem(poly, ann)
            for i, cv in enumerate(poly.coeffs):
                terms.append((a, c, i, cv))
    return Element.from_terms(s, terms)


@cache
def g2_element(s: HalfInt) -> Element:
    return element_from_g2_poly(s, (RatQ.zero(), RatQ.one()))


@cache
def _g2_interpolation(s: HalfInt, exponent: int) -> tuple[RatQ, ...]:
    """Coefficients of sigma_2^(+-1) as a polynomial in g2 (Lagrange through the spectrum)."""
    two_s = s.twice
    points = [RatQ.of(chi(HalfInt.of(r))) for r in range(two_s + 1)]
    values = [RatQ.of(qfactor(r)) ** exponent for r in range(two_s + 1)]
    total = KPoly.zero()
    for r in range(two_s + 1):
        basis = KPoly.one()
        denom = RatQ.one()
        for p in range(two_s + 1):
            if p == r:
                continue
            basis = basis * KPoly.linear_root(points[p])
            denom = denom * (points[r] - points[p])
        total = total + basis * (values[r] / denom)
    coeffs = list(total.coeffs) + [RatQ.zero()] * (two_s + 1 - len(total.coeffs))
    return tuple(coeffs)


@cache
def sigma_element(i: int, exponent: int, s: HalfInt) -> Element:
    """The braid generator image sigma_i^(+-1) in the standard basis."""
    if i not in (1, 2) or exponent not in (1, -1):
        raise ValueError("generator index must be 1 or 2 and exponent +-1")
    if i == 1:
        return Element(
            s,
            {
                BasisKey(a, a, 0): RatQ.of(qfactor(a)) ** exponent
                for a in range(s.twice + 1)
            },
        )
    return element_from_g2_poly(s, _g2_interpolation(s, exponent))


def e2_projector(s: HalfInt, r: int) -> Element:
    """The middle-strand idempotent e2(r) as an interpolation polynomial in g2."""
    two_s = s.twice
    if not 0 <= r <= two_s:
        raise ValueError("projector label out of range")
    basis = KPoly.one()
    denom = RatQ.one()
    for p in range(two_s + 1):
        if p == r:
            continue
        basis = basis * KPoly.linear_root(chi(HalfInt.of(p)))
        denom = denom * (RatQ.of(chi(HalfInt.of(r))) - RatQ.of(chi(HalfInt.of(p))))
    coeffs = [c / denom for c in basis.coeffs]
    return element_from_g2_poly(s, coeffs)


# -- braid words ----------------------------------------------------------------------


def parse_word(word: str) -> list[tuple[int, int]]:
    """Parse whitespace-separated tokens s1, s2, s1^-1, s2^-1 into (index, exponent)."""
    out: list[tuple[int, int]] = []
    for token in word.split():
        base, _, exp = token.partition("^")
        if base not in ("s1", "s2"):
            raise ValueError(f"unknown generator {token!r}")
        if exp not in ("", "1", "-1"):
            raise ValueError(f"unsupported exponent in {token!r}")
        out.append((int(base[1]), -1 if exp == "-1" else 1))
    return out


def word_normal_form(word: Union[str, Sequence[tuple[int, int]]], s: HalfInt) -> Element:
    """Fold the braid word through the standard-basis multiplication; empty word is 1."""
    letters = parse_word(word) if isinstance(word, str) else list(word)
    out = one(s)
    for i, exponent in letters:
        out = out @ sigma_element(i, exponent, s)
    return out


# -- bases -------------------------------------------------------------------------


def std_basis(s: HalfInt) -> list[BasisKey]:
    """All standard-basis keys in (a, c, p) order."""
    two_s = s.twice
    return [
        BasisKey(a, c, p)
        for a in range(two_s + 1)
        for c in range(two_s + 1)
        for p in range(power_bound(a, c, s) + 1)
    ]


def path_basis(s: HalfInt) -> list[Path]:
    """The path basis, cell by cell in (a, c) order, by increasing length within a cell."""
    two_s = s.twice
    out: list[Path] = []
    for a in range(two_s + 1):
        for c in range(two_s + 1):
            out.extend(cell_paths(a, c, s))
    return out


def path_to_std(gamma: Path, s: HalfInt) -> Element:
    """The element x_gamma in standard coordinates."""
    poly = reduce_path(gamma, s, mode="full")
    return Element.from_terms(
        s, [(gamma.first, gamma.last, i, cv) for i, cv in enumerate(poly.coeffs)]
    )
