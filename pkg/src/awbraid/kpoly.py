"""Polynomials in the central element kappa with rational-function coefficients."""

from __future__ import annotations

from typing import Iterable, Sequence, Union

from .laurent import LaurentQ
from .ratq import RatQ, Scalar

CoeffLike = Union[RatQ, LaurentQ, Scalar]


class KPoly:
    """Dense polynomial in kappa over RatQ; the zero polynomial has degree -1."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[CoeffLike] = ()):
        cs = [RatQ.of(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def zero() -> KPoly:
        return KPoly()

    @staticmethod
    def one() -> KPoly:
        return KPoly([RatQ.one()])

    @staticmethod
    def constant(c: CoeffLike) -> KPoly:
        return KPoly([c])

    @staticmethod
    def kappa() -> KPoly:
        return KPoly([RatQ.zero(), RatQ.one()])

    @staticmethod
    def linear_root(root: CoeffLike) -> KPoly:
        """The monic factor (kappa - root)."""
        return KPoly([-RatQ.of(root), RatQ.one()])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, KPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (RatQ, LaurentQ, int)):
            return self == KPoly([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def coeff(self, p: int) -> RatQ:
        if 0 <= p < len(self.coeffs):
            return self.coeffs[p]
        return RatQ.zero()

    def __add__(self, other: KPoly) -> KPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return KPoly(out)

    def __neg__(self) -> KPoly:
        return KPoly([-c for c in self.coeffs])

    def __sub__(self, other: KPoly) -> KPoly:
        return self + (-other)

    def __mul__(self, other: Union["KPoly", CoeffLike]) -> KPoly:
        if not isinstance(other, KPoly):
            s = RatQ.of(other)
            return KPoly([c * s for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return KPoly()
        out = [RatQ.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return KPoly(out)

    __rmul__ = __mul__

    def shift(self, p: int) -> KPoly:
        """Multiply by kappa^p."""
        if self.is_zero or p == 0:
            return self
        return KPoly([RatQ.zero()] * p + list(self.coeffs))

    def evaluate(self, value: CoeffLike) -> RatQ:
        v = RatQ.of(value)
        acc = RatQ.zero()
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def monic(self) -> KPoly:
        if self.is_zero:
            raise ZeroDivisionError("the zero polynomial cannot be made monic")
        lead = self.coeffs[-1]
        if lead.is_one:
            return self
        return self * lead.inverse()

    def divmod_monic(self, m: KPoly) -> tuple[KPoly, KPoly]:
        """Quotient and remainder by a monic divisor of degree >= 1."""
        if m.degree < 1 or not m.coeffs[-1].is_one:
            raise ValueError("divisor must be monic of degree at least 1")
        rem = list(self.coeffs)
        dm = m.degree
        quo = [RatQ.zero()] * max(len(rem) - dm, 0)
        for k in range(len(rem) - dm - 1, -1, -1):
            c = rem[k + dm]
            if c.is_zero:
                continue
            quo[k] = c
            for j in range(dm + 1):
                rem[k + j] = rem[k + j] - c * m.coeffs[j]
        return KPoly(quo), KPoly(rem[:dm])

    def root_multiplicity(self, root: CoeffLike) -> int:
        """How many times (kappa - root) divides self (0 for the zero polynomial)."""
        factor = KPoly.linear_root(root)
        count = 0
        f = self
        while not f.is_zero:
            quo, rem = f.divmod_monic(factor)
            if not rem.is_zero:
                break
            count += 1
            f = quo
        return count

    def __repr__(self) -> str:
        return f"KPoly({self})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for p in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[p]
            if c.is_zero:
                continue
            if p == 0:
                parts.append(f"({c})")
            elif p == 1:
                parts.append(f"({c})*k")
            else:
                parts.append(f"({c})*k^{p}")
        return " + ".join(parts)


def kpoly_rem(f: KPoly, m: KPoly) -> KPoly:
    """Remainder of f modulo a monic m of degree >= 1."""
    return f.divmod_monic(m)[1]


def kpoly_product(factors: Sequence[KPoly]) -> KPoly:
    out = KPoly.one()
    for f in factors:
        out = out * f
    return out
