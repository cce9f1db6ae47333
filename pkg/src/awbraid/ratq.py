"""Canonical rational functions in q over the rationals: the coefficient field of the build.

Canonical form: the denominator is an ordinary polynomial (no negative powers,
nonzero constant term) with primitive integer coefficients and positive leading
coefficient; all rational scaling and the q-power offset live in the numerator;
numerator and denominator share no polynomial factor.  Equality of canonical
forms is structural equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .laurent import LaurentQ, from_int_list, poly_gcd_int, _poly_divmod_exact

Scalar = Union[int, Fraction]


class PoleError(ArithmeticError):
    """A denominator vanished at the requested specialization point."""


class RatQ:
    """num / den with num Laurent and den an ordinary polynomial, in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentQ, den: LaurentQ | None = None):
        if den is None:
            den = LaurentQ.one()
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self.num = LaurentQ.zero()
            self.den = LaurentQ.one()
            return
        if den.is_one:
            self.num = num
            self.den = den
            return
        c_num, p_num, off_num = num.content_and_primitive()
        c_den, p_den, off_den = den.content_and_primitive()
        g = poly_gcd_int(p_num, p_den)
        if len(g) > 1:
            p_num = _poly_divmod_exact(p_num, g)
            p_den = _poly_divmod_exact(p_den, g)
        scalar = c_num / c_den
        # keep the denominator primitive with positive lead: fold sign into the numerator
        if p_den[-1] < 0:
            p_den = [-c for c in p_den]
            scalar = -scalar
        self.num = from_int_list(p_num, off_num - off_den) * scalar
        self.den = from_int_list(p_den)

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero() -> RatQ:
        return RatQ(LaurentQ.zero())

    @staticmethod
    def one() -> RatQ:
        return RatQ(LaurentQ.one())

    @staticmethod
    def of(value: Union["RatQ", LaurentQ, Scalar]) -> RatQ:
        if isinstance(value, RatQ):
            return value
        if isinstance(value, LaurentQ):
            return RatQ(value)
        return RatQ(LaurentQ({0: value}))

    @staticmethod
    def fraction(num: Union[LaurentQ, Scalar], den: Union[LaurentQ, Scalar]) -> RatQ:
        if not isinstance(num, LaurentQ):
            num = LaurentQ({0: num})
        if not isinstance(den, LaurentQ):
            den = LaurentQ({0: den})
        return RatQ(num, den)

    # -- structure -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num.is_one and self.den.is_one

    def is_laurent(self) -> bool:
        return self.den.is_one

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatQ):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (LaurentQ, int, Fraction)):
            return self == RatQ.of(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: Union["RatQ", LaurentQ, Scalar]) -> RatQ:
        other = RatQ.of(other)
        if self.den == other.den:
            return RatQ(self.num + other.num, self.den)
        return RatQ(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RatQ:
        out = RatQ.__new__(RatQ)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other: Union["RatQ", LaurentQ, Scalar]) -> RatQ:
        return self + (-RatQ.of(other))

    def __rsub__(self, other: Union[LaurentQ, Scalar]) -> RatQ:
        return RatQ.of(other) - self

    def __mul__(self, other: Union["RatQ", LaurentQ, Scalar]) -> RatQ:
        other = RatQ.of(other)
        if self.den.is_one and other.den.is_one:
            out = RatQ.__new__(RatQ)
            out.num = self.num * other.num
            out.den = self.den
            return out
        return RatQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Union["RatQ", LaurentQ, Scalar]) -> RatQ:
        other = RatQ.of(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatQ(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: Union[LaurentQ, Scalar]) -> RatQ:
        return RatQ.of(other) / self

    def inverse(self) -> RatQ:
        return RatQ.one() / self

    def __pow__(self, n: int) -> RatQ:
        if n < 0:
            return self.inverse() ** (-n)
        result = RatQ.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- evaluation --------------------------------------------------------------

    def evaluate(self, q0: Fraction) -> Fraction:
        """Exact value at a nonzero rational point; PoleError if the denominator vanishes."""
        if q0 == 0:
            raise ZeroDivisionError("cannot specialize at q = 0")
        d = self.den.evaluate(q0)
        if d == 0:
            raise PoleError(f"pole at q = {q0}")
        return self.num.evaluate(q0) / d

    def __repr__(self) -> str:
        return f"RatQ({self})"

    def __str__(self) -> str:
        if self.den.is_one:
            return str(self.num)
        num = str(self.num)
        if len(self.num.terms()) > 1:
            num = f"({num})"
        return f"{num}/({self.den})"


def ratq_arith(a: RatQ, b: RatQ, op: str) -> RatQ:
    """Dispatch add/sub/mul/div by name (the wire-level entry point)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def eval_q(r: RatQ, q0: Fraction) -> Fraction:
    """Specialization oracle: exact value of r at q = q0."""
    return r.evaluate(q0)
