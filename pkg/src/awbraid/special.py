"""Raw-mode probes of the quotient: root multiplicities and the root-of-unity limit.

Two computations run the rewriting calculus *without* imposing the
kappa-annihilators, which is what makes them informative:

* the characteristic polynomial of g2 sandwiched by the level-0 projector
  contracts to a polynomial R(kappa) whose (kappa - chi_s) multiplicity
  being exactly one is the desk-scale evidence that the level-0 projector
  relation is implied by the others;

* the telescoped combination of sigma_2 sandwiches at a level a above the
  spin contracts to Q_a(kappa), whose value at chi_(s-a) has a nonzero
  certified limit at the primitive (4s+4)-th root of unity, proving Q_a is
  not the zero polynomial.
"""

from __future__ import annotations

import dataclasses

from .cyclo import CycloElem, cyclo_limit_with_valuations
from .elements import _g2_interpolation
from .halfint import HalfInt
from .kpoly import KPoly, kpoly_rem
from .laurent import chi, qfactor
from .ratq import RatQ
from .rewrite import expand_sandwich, expand_sandwich_through, kappa_annihilator


def remark45_multiplicity(s: HalfInt) -> int:
    """Multiplicity of the root chi_s in the raw contraction of the g2 characteristic
    polynomial sandwiched by the level-0 projector."""
    two_s = s.twice
    char = KPoly.one()
    for p in range(two_s + 1):
        char = char * KPoly.linear_root(chi(HalfInt.of(p)))
    total = KPoly.zero()
    for n, c_n in enumerate(char.coeffs):
        if c_n.is_zero:
            continue
        total = total + expand_sandwich(0, n, 0, s) * c_n
    return total.root_multiplicity(chi(s))


def appendix_Q(a: int, s: HalfInt) -> KPoly:
    """The raw-mode polynomial Q_a for a level a strictly above the spin.

    Defined by chi_a q_a e1(a) sigma_2 e1(a) minus the sum over r in
    {a-1, a, a+1} of q_r e1(a) g2 e1(r) sigma_2 e1(a), contracted with the
    rewriting rules only.  Its degree is at most 2s+1.
    """
    two_s = s.twice
    if not (s < HalfInt.of(a) and a <= two_s):
        raise ValueError(f"level must satisfy s < a <= 2s, got a = {a} at spin {s}")
    beta = _g2_interpolation(s, 1)
    lead = KPoly.zero()
    for n, b_n in enumerate(beta):
        if b_n.is_zero:
            continue
        lead = lead + expand_sandwich(a, n, a, s) * b_n
    total = lead * (RatQ.of(chi(HalfInt.of(a))) * RatQ.of(qfactor(a)))
    for r in (a - 1, a, a + 1):
        if not 0 <= r <= two_s:
            continue
        part = KPoly.zero()
        for n, b_n in enumerate(beta):
            if b_n.is_zero:
                continue
            part = part + expand_sandwich_through(a, r, n, a, s) * b_n
        total = total - part * RatQ.of(qfactor(r))
    if total.degree > two_s + 1:
        raise AssertionError("the contracted polynomial exceeds degree 2s+1")
    return total


@dataclasses.dataclass(frozen=True)
class AppendixLimitReport:
    """Outcome of the certified root-of-unity limit of Q_a at kappa = chi_(s-a)."""

    spin: HalfInt
    a: int
    order: int
    limit: CycloElem
    reference: CycloElem
    num_valuation: int
    den_valuation: int

    @property
    def equal(self) -> bool:
        return self.limit == self.reference

    @property
    def nonzero(self) -> bool:
        return not self.limit.is_zero

    @property
    def passed(self) -> bool:
        return self.equal and self.nonzero


def appendix_limit_check(a: int, s: HalfInt) -> AppendixLimitReport:
    """Evaluate Q_a at chi_(s-a), take the exact limit at the primitive (4s+4)-th
    root of unity, and compare with q_a (chi_a - chi_0) in the cyclotomic field."""
    order = 2 * s.twice + 4
    value = appendix_Q(a, s).evaluate(chi(s - HalfInt.of(a)))
    limit, v_num, v_den = cyclo_limit_with_valuations(value, order)
    reference = CycloElem.from_laurent(
        order, qfactor(a) * (chi(HalfInt.of(a)) - chi(HalfInt.of(0)))
    )
    return AppendixLimitReport(
        spin=s,
        a=a,
        order=order,
        limit=limit,
        reference=reference,
        num_valuation=v_num,
        den_valuation=v_den,
    )


def annihilator_consistency(a: int, s: HalfInt) -> bool:
    """Q_a must vanish modulo the level-a kappa-annihilator."""
    return kpoly_rem(appendix_Q(a, s), kappa_annihilator(a, a, s)).is_zero
