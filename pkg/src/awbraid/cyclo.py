"""Exact arithmetic in Q[q]/Phi_n and certified limits of rational functions at roots of unity.

The limit q -> exp(2*pi*i/n) of a rational function is taken algebraically:
divide numerator and denominator by the n-th cyclotomic polynomial until the
denominator no longer vanishes, then reduce the quotient.  No numerics are
involved; a pole is reported exactly when the denominator's Phi_n-adic
valuation exceeds the numerator's.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .laurent import LaurentQ, _cyclotomic_int, _poly_divmod_exact, from_int_list
from .ratq import PoleError, RatQ


def _phi_coeffs(n: int) -> tuple[int, ...]:
    return _cyclotomic_int(n)


def _reduce_mod_phi(coeffs: list[Fraction], n: int) -> list[Fraction]:
    """Remainder of an ordinary polynomial (ascending coeffs) by the monic Phi_n."""
    phi = _phi_coeffs(n)
    d = len(phi) - 1
    rem = list(coeffs)
    for k in range(len(rem) - d - 1, -1, -1):
        c = rem[k + d]
        if c:
            for j in range(d + 1):
                rem[k + j] -= c * phi[j]
    rem = rem[:d]
    rem += [Fraction(0)] * (d - len(rem))
    return rem


class CycloElem:
    """An element of Q[q]/Phi_n(q), n >= 1, as deg(Phi_n) reduced coefficients."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Sequence[Fraction | int]):
        if n < 1:
            raise ValueError("root order must be positive")
        d = len(_phi_coeffs(n)) - 1
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > d:
            cs = _reduce_mod_phi(cs, n)
        cs += [Fraction(0)] * (d - len(cs))
        self.n = n
        self.coeffs = tuple(cs)

    @staticmethod
    def zero(n: int) -> CycloElem:
        return CycloElem(n, [])

    @staticmethod
    def one(n: int) -> CycloElem:
        return CycloElem(n, [1])

    @staticmethod
    def from_laurent(n: int, f: LaurentQ) -> CycloElem:
        """Reduce a Laurent polynomial: q is a unit mod Phi_n, so negative powers clear."""
        if f.is_zero:
            return CycloElem.zero(n)
        v = f.valuation()
        shifted = f.shift(-v) if v < 0 else f
        coeffs = [Fraction(0)] * (shifted.degree() + 1)
        for e, c in shifted.terms():
            coeffs[e] = c
        out = CycloElem(n, coeffs)
        if v < 0:
            out = out * _q_power_class(n, v)
        return out

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycloElem):
            return self.n == other.n and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == CycloElem(self.n, [other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.coeffs))

    def __add__(self, other: CycloElem) -> CycloElem:
        self._check(other)
        return CycloElem(self.n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> CycloElem:
        return CycloElem(self.n, [-a for a in self.coeffs])

    def __sub__(self, other: CycloElem) -> CycloElem:
        return self + (-other)

    def __mul__(self, other: CycloElem | int | Fraction) -> CycloElem:
        if isinstance(other, (int, Fraction)):
            return CycloElem(self.n, [a * other for a in self.coeffs])
        self._check(other)
        prod = [Fraction(0)] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return CycloElem(self.n, prod)

    __rmul__ = __mul__

    def inverse(self) -> CycloElem:
        """Inverse via the extended Euclidean algorithm; Phi_n is irreducible over Q."""
        if self.is_zero:
            raise ZeroDivisionError("zero is not invertible")
        phi = [Fraction(c) for c in _phi_coeffs(self.n)]
        r0, r1 = phi, list(self.coeffs)
        t0, t1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, _frac_poly_sub(t0, _frac_poly_mul(q, t1))
        g = _trim_fracs(r0)
        if len(g) != 1:
            raise ArithmeticError("gcd with the cyclotomic polynomial is not constant")
        return CycloElem(self.n, [c / g[0] for c in t0])

    def _check(self, other: CycloElem) -> None:
        if self.n != other.n:
            raise ValueError(f"mixed cyclotomic orders {self.n} and {other.n}")

    def __repr__(self) -> str:
        return f"CycloElem({self.n}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*z")
            else:
                parts.append(f"{c}*z^{e}")
        return " + ".join(parts)


def _trim_fracs(p: list[Fraction]) -> list[Fraction]:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def _frac_poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _trim_fracs(a)
    b = _trim_fracs(b)
    if not b:
        raise ZeroDivisionError
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = f
        for j, y in enumerate(b):
            a[k + j] -= f * y
        a = _trim_fracs(a)
    return q, a


def _frac_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _frac_poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = list(a) + [Fraction(0)] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    return _trim_fracs(out)


def _q_power_class(n: int, e: int) -> CycloElem:
    """The class of q^e, for any sign of e."""
    if e >= 0:
        return CycloElem.from_laurent(n, LaurentQ.q_power(e))
    base = CycloElem.from_laurent(n, LaurentQ.q_power(1)).inverse()
    out = CycloElem.one(n)
    for _ in range(-e):
        out = out * base
    return out


def phi_valuation(f: LaurentQ, n: int) -> int:
    """The Phi_n-adic valuation of a nonzero Laurent polynomial (q-powers are units)."""
    if f.is_zero:
        raise ValueError("the zero polynomial has infinite valuation")
    _, prim, _ = f.content_and_primitive()
    phi = list(_phi_coeffs(n))
    count = 0
    while True:
        try:
            quo = _poly_divmod_exact(prim, phi)
        except ArithmeticError:
            return count
        count += 1
        prim = quo


def cyclo_limit(r: RatQ, n: int) -> CycloElem:
    """Limit of r at a primitive n-th root of unity, by exact Phi_n division.

    Raises PoleError when the denominator's Phi_n multiplicity exceeds the
    numerator's; otherwise returns the exact limit in Q[q]/Phi_n.
    """
    elem, _, _ = cyclo_limit_with_valuations(r, n)
    return elem


def cyclo_limit_with_valuations(r: RatQ, n: int) -> tuple[CycloElem, int, int]:
    """As cyclo_limit, also reporting the Phi_n valuations of numerator and denominator."""
    if r.is_zero:
        return CycloElem.zero(n), 0, 0
    v_num = phi_valuation(r.num, n)
    v_den = phi_valuation(r.den, n)
    if v_den > v_num:
        raise PoleError(
            f"pole at the primitive {n}-th root of unity: "
            f"denominator valuation {v_den} exceeds numerator valuation {v_num}"
        )
    num, den = r.num, r.den
    phi = from_int_list(_phi_coeffs(n))
    for _ in range(v_den):
        num = _exact_laurent_div(num, phi)
        den = _exact_laurent_div(den, phi)
    num_cls = CycloElem.from_laurent(n, num)
    den_cls = CycloElem.from_laurent(n, den)
    return num_cls * den_cls.inverse(), v_num, v_den


def _exact_laurent_div(f: LaurentQ, g: LaurentQ) -> LaurentQ:
    """Exact division of Laurent polynomials when the primitive part of g divides f."""
    content, prim, off = f.content_and_primitive()
    g_content, gprim, goff = g.content_and_primitive()
    quo = _poly_divmod_exact(prim, gprim)
    return from_int_list(quo, off - goff) * (content / g_content)
