"""Laurent polynomials in the deformation parameter q over the rationals.

This is the coefficient workhorse of the package: the bracket values
chi_p = q^(2p+1) + q^(-2p-1), the eigenvalue scalars q_p = (-1)^p q^(p(p+1)),
balanced q-integers and cyclotomic polynomials all live here.  Negative
exponents are first class; coefficients are exact Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import gcd as _int_gcd
from typing import Iterable, Mapping, Tuple, Union

from .halfint import HalfInt

Scalar = Union[int, Fraction]


class LaurentQ:
    """A Laurent polynomial sum(c_e * q^e) stored sparsely as {e: c} with no zero entries."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        c: dict[int, Fraction] = {}
        if coeffs:
            for e, v in coeffs.items():
                f = v if isinstance(v, Fraction) else Fraction(v)
                if f:
                    c[e] = f
        self._c = c

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> LaurentQ:
        return LaurentQ()

    @staticmethod
    def one() -> LaurentQ:
        return LaurentQ({0: 1})

    @staticmethod
    def monomial(coeff: Scalar, exp: int) -> LaurentQ:
        return LaurentQ({exp: coeff})

    @staticmethod
    def q_power(exp: int) -> LaurentQ:
        return LaurentQ({exp: 1})

    # -- structure ---------------------------------------------------------

    def terms(self) -> list[tuple[int, Fraction]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._c.items())

    def coeff(self, exp: int) -> Fraction:
        return self._c.get(exp, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def is_one(self) -> bool:
        return self._c == {0: Fraction(1)}

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    def valuation(self) -> int:
        """Lowest exponent present; raises on the zero polynomial."""
        if not self._c:
            raise ValueError("valuation of the zero polynomial")
        return min(self._c)

    def degree(self) -> int:
        """Highest exponent present; raises on the zero polynomial."""
        if not self._c:
            raise ValueError("degree of the zero polynomial")
        return max(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentQ):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == LaurentQ({0: other})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._c.items())))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: LaurentQ | Scalar) -> LaurentQ:
        if isinstance(other, (int, Fraction)):
            other = LaurentQ({0: other})
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e)
            if s is None:
                c[e] = v
            else:
                s = s + v
                if s:
                    c[e] = s
                else:
                    del c[e]
        out = LaurentQ.__new__(LaurentQ)
        out._c = c
        return out

    __radd__ = __add__

    def __neg__(self) -> LaurentQ:
        out = LaurentQ.__new__(LaurentQ)
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __sub__(self, other: LaurentQ | Scalar) -> LaurentQ:
        if isinstance(other, (int, Fraction)):
            other = LaurentQ({0: other})
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LaurentQ:
        return LaurentQ({0: other}) - self

    def __mul__(self, other: LaurentQ | Scalar) -> LaurentQ:
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentQ()
            out = LaurentQ.__new__(LaurentQ)
            out._c = {e: v * other for e, v in self._c.items()}
            return out
        a, b = self._c, other._c
        if len(a) > len(b):
            a, b = b, a
        c: dict[int, Fraction] = {}
        for ea, va in a.items():
            for eb, vb in b.items():
                e = ea + eb
                s = c.get(e)
                if s is None:
                    c[e] = va * vb
                else:
                    s = s + va * vb
                    if s:
                        c[e] = s
                    else:
                        del c[e]
        out = LaurentQ.__new__(LaurentQ)
        out._c = c
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentQ:
        if n < 0:
            raise ValueError("negative powers need RatQ")
        result = LaurentQ.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentQ:
        """Multiply by q^k."""
        if k == 0:
            return self
        out = LaurentQ.__new__(LaurentQ)
        out._c = {e + k: v for e, v in self._c.items()}
        return out

    def substitute_q_power(self, m: int) -> LaurentQ:
        """The image under q -> q^m (m nonzero)."""
        if m == 0:
            raise ValueError("q -> q^0 is not a ring map here")
        out = LaurentQ.__new__(LaurentQ)
        out._c = {e * m: v for e, v in self._c.items()}
        return out

    def evaluate(self, q0: Fraction) -> Fraction:
        """Exact value at a nonzero rational point."""
        if q0 == 0:
            raise ZeroDivisionError("Laurent polynomials cannot be evaluated at 0")
        total = Fraction(0)
        for e, v in self._c.items():
            total += v * q0**e
        return total

    # -- integer normal form -------------------------------------------------

    def content_and_primitive(self) -> tuple[Fraction, list[int], int]:
        """Write self = content * q^offset * P with P a primitive integer polynomial.

        Returns (content, coefficient list of P ascending from degree 0, offset).
        P has nonzero constant term and positive leading coefficient; the zero
        polynomial returns (0, [], 0).
        """
        if not self._c:
            return Fraction(0), [], 0
        off = self.valuation()
        deg = self.degree()
        den_lcm = 1
        for v in self._c.values():
            den_lcm = den_lcm * v.denominator // _int_gcd(den_lcm, v.denominator)
        ints = [0] * (deg - off + 1)
        g = 0
        for e, v in self._c.items():
            n = int(v * den_lcm)
            ints[e - off] = n
            g = _int_gcd(g, n)
        if ints[-1] < 0:
            g = -g
        content = Fraction(g, den_lcm)
        prim = [n // g for n in ints]
        return content, prim, off

    def __repr__(self) -> str:
        return f"LaurentQ({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts: list[str] = []
        for e, v in sorted(self._c.items(), reverse=True):
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if v > 0 else f"- {body}")
        return " ".join(parts)


def from_int_list(coeffs: Iterable[int | Fraction], offset: int = 0) -> LaurentQ:
    """Build a LaurentQ from an ascending coefficient list starting at q^offset."""
    return LaurentQ({offset + i: c for i, c in enumerate(coeffs)})


# -- q-notation --------------------------------------------------------------


def chi(p: HalfInt | int | Fraction) -> LaurentQ:
    """chi_p = q^(2p+1) + q^(-2p-1)."""
    e = HalfInt.of(p).twice + 1
    if e == 0:
        return LaurentQ({0: 2})
    return LaurentQ({e: 1, -e: 1})


def qfactor(p: int) -> LaurentQ:
    """q_p = (-1)^p q^(p(p+1)) for a non-negative integer decomposition label."""
    if p < 0:
        raise ValueError("decomposition labels are non-negative")
    return LaurentQ({p * (p + 1): -1 if p % 2 else 1})


def qint(n: int) -> LaurentQ:
    """The balanced q-integer [n] = (q^n - q^-n)/(q - q^-1); [-n] = -[n]."""
    if n == 0:
        return LaurentQ()
    sign = 1 if n > 0 else -1
    n = abs(n)
    return LaurentQ({n - 1 - 2 * k: sign for k in range(n)})


# -- dense integer polynomial helpers (ascending coefficients, constant first) --


def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul_int(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_divmod_exact(a: list[int], b: list[int]) -> list[int]:
    """Quotient of a by b assuming the division over Q is exact with integer quotient."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [0] * (len(a) - len(b) + 1) if len(a) >= len(b) else []
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1]
        if c == 0:
            continue
        if c % lead != 0:
            raise ArithmeticError("division is not exact over the integers")
        f = c // lead
        q[k] = f
        for j, y in enumerate(b):
            a[k + j] -= f * y
    if any(a):
        raise ArithmeticError("division left a remainder")
    return _trim(q)


def _poly_content(p: list[int]) -> int:
    g = 0
    for c in p:
        g = _int_gcd(g, c)
    return g


def _poly_primitive(p: list[int]) -> list[int]:
    g = _poly_content(p)
    if g == 0:
        return []
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def poly_gcd_int(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd in Z[q] by the subresultant-style primitive remainder sequence."""
    a = _poly_primitive(list(a))
    b = _poly_primitive(list(b))
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        # pseudo-remainder: lead(b)^(deg a - deg b + 1) * a mod b
        r = list(a)
        lb = b[-1]
        while len(r) >= len(b) and any(r):
            if r[-1] == 0:
                r.pop()
                continue
            f = r[-1]
            shift = len(r) - len(b)
            r = [lb * c for c in r]
            for j, y in enumerate(b):
                r[shift + j] -= f * y
            _trim(r)
        a, b = b, _poly_primitive(r)
    return _poly_primitive(a)


# -- cyclotomic polynomials ----------------------------------------------------


@cache
def _cyclotomic_int(n: int) -> tuple[int, ...]:
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    if n == 1:
        return (-1, 1)
    # q^n - 1 divided by the cyclotomic polynomials of all proper divisors.
    num = [0] * (n + 1)
    num[0] = -1
    num[n] = 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divmod_exact(num, list(_cyclotomic_int(d)))
    return tuple(num)


def cyclotomic(n: int) -> LaurentQ:
    """The n-th cyclotomic polynomial, computed by exact division of q^n - 1."""
    return from_int_list(_cyclotomic_int(n))
