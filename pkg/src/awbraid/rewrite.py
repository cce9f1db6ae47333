"""The path-contraction rewriting system and kappa-annihilator reduction.

Three local rules contract a path while multiplying a running polynomial in the
central element kappa:

    flat  (b, b)      ->  (b)   times  tau_b(kappa)
    dip   (b, b-1, b) ->  (b)   times  F_b(kappa)
    peak  (b, b+1, b) ->  (b)   times  F_(b+1)(kappa)

with tau_a = chi_s (kappa + chi_s) / (chi_0 + chi_a) and F_a a quadratic with
roots chi_(s-a), chi_(s+a).  Every path contracts to the strictly monotone path
between its endpoints; in "full" mode the resulting polynomial is additionally
remaindered by the monic kappa-annihilator of the endpoint pair, which is what
passes from the raw rewriting calculus to the finite-dimensional quotient.
"""

from __future__ import annotations

import random
from functools import cache
from typing import Literal, Optional

from .halfint import HalfInt, halfint_range
from .kpoly import KPoly, kpoly_rem
from .laurent import LaurentQ, chi, qint
from .paths import Path, enumerate_paths
from .ratq import RatQ

Mode = Literal["raw", "full"]
Strategy = Literal["leftmost", "rightmost", "random"]


def power_bound(a: int, c: int, s: HalfInt) -> int:
    """Largest independent kappa power on the (a, c) cell: n(a, c)."""
    two_s = s.twice
    if not (0 <= a <= two_s and 0 <= c <= two_s):
        raise ValueError("levels out of range")
    if a + c <= two_s:
        return 2 * min(a, c)
    return two_s - abs(a - c)


@cache
def tau_poly(a: int, s: HalfInt) -> KPoly:
    """Flat-edge factor: chi_s (kappa + chi_s) / (chi_0 + chi_a), degree one."""
    if not 0 <= a <= s.twice:
        raise ValueError("level out of range")
    lead = RatQ.fraction(chi(s), chi(HalfInt(0)) + chi(HalfInt.of(a)))
    return KPoly([lead * chi(s), lead])


@cache
def f_poly(a: int, s: HalfInt) -> KPoly:
    """Dip/peak factor: a quadratic vanishing at chi_(s-a) and chi_(s+a)."""
    if not 1 <= a <= s.twice:
        raise ValueError("dip/peak level out of range")
    two_s = s.twice
    qa = LaurentQ.q_power(a) + LaurentQ.q_power(-a)
    pref = -RatQ.fraction(
        qint(two_s + 1 - a) * qint(two_s + 1 + a),
        qa * qa * qint(2 * a - 1) * qint(2 * a + 1),
    )
    quad = KPoly.linear_root(chi(s - HalfInt.of(a))) * KPoly.linear_root(chi(s + HalfInt.of(a)))
    return quad * pref


@cache
def kappa_annihilator(a: int, c: int, s: HalfInt) -> KPoly:
    """Monic product of (kappa - chi_r) over the common annihilating range of a and c."""
    two_s = s.twice
    if not (0 <= a <= two_s and 0 <= c <= two_s):
        raise ValueError("levels out of range")
    lo = max(abs(HalfInt.of(a) - s), abs(HalfInt.of(c) - s))
    hi = min(HalfInt.of(a), HalfInt.of(c)) + s
    out = KPoly.one()
    for r in halfint_range(lo, hi):
        out = out * KPoly.linear_root(chi(r))
    if out.degree != power_bound(a, c, s) + 1:
        raise AssertionError("annihilator degree disagrees with the cell power bound")
    return out


def _match_at(levels: list[int], i: int) -> Optional[tuple[str, int]]:
    if i + 1 < len(levels) and levels[i + 1] == levels[i]:
        return ("flat", i)
    if i + 2 < len(levels) and levels[i + 2] == levels[i]:
        if levels[i + 1] == levels[i] - 1:
            return ("dip", i)
        if levels[i + 1] == levels[i] + 1:
            return ("peak", i)
    return None


def _find_matches(levels: list[int]) -> list[tuple[str, int]]:
    return [m for i in range(len(levels)) if (m := _match_at(levels, i)) is not None]


def reduce_path(
    path: Path,
    s: HalfInt,
    mode: Mode = "full",
    strategy: Strategy = "leftmost",
    rng: random.Random | None = None,
) -> KPoly:
    """The polynomial G with x_path = G(kappa) x_monotone(first, last).

    Terminates in at most length(path) rewrites; the result is independent of
    the rule-application order (a tested property, since the factors commute).
    """
    if not path.fits(s):
        raise ValueError(f"path exceeds level 2s = {s.twice}")
    levels = list(path.levels)
    poly = KPoly.one()
    while True:
        matches = _find_matches(levels)
        if not matches:
            break
        if strategy == "leftmost":
            kind, i = matches[0]
        elif strategy == "rightmost":
            kind, i = matches[-1]
        else:
            kind, i = (rng or random).choice(matches)
        if kind == "flat":
            poly = poly * tau_poly(levels[i], s)
            del levels[i + 1]
        elif kind == "dip":
            poly = poly * f_poly(levels[i], s)
            del levels[i + 1 : i + 3]
        else:
            poly = poly * f_poly(levels[i] + 1, s)
            del levels[i + 1 : i + 3]
    if mode == "full":
        ann = kappa_annihilator(path.first, path.last, s)
        if poly.degree >= ann.degree:
            poly = kpoly_rem(poly, ann)
    return poly


@cache
def expand_sandwich(a: int, b: int, c: int, s: HalfInt) -> KPoly:
    """Raw-mode polynomial P with e1(a) g2^b e1(c) = P(kappa) x_monotone(a, c).

    Zero when b < |a - c|; otherwise of degree at most b - |a - c|.
    """
    total = KPoly.zero()
    for gamma in enumerate_paths(a, c, b, s):
        total = total + reduce_path(gamma, s, mode="raw")
    return total


@cache
def expand_sandwich_through(a: int, r: int, b: int, c: int, s: HalfInt) -> KPoly:
    """Raw-mode polynomial for e1(a) g2 e1(r) g2^b e1(c): paths forced through r first."""
    if abs(a - r) > 1:
        return KPoly.zero()
    total = KPoly.zero()
    for gamma in enumerate_paths(r, c, b, s):
        total = total + reduce_path(Path((a,) + gamma.levels), s, mode="raw")
    return total
