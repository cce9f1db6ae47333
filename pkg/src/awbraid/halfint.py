"""Half-integer labels (spins, levels, decomposition indices) stored as doubled integers."""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Iterator, Union


@dataclasses.dataclass(frozen=True, order=True)
class HalfInt:
    """The half-integer ``twice / 2``, kept exact by never dividing.

    All spin and level labels go through this type; there is no floating
    arithmetic anywhere in the package.
    """

    twice: int

    @classmethod
    def of(cls, value: Union["HalfInt", int, Fraction, str]) -> HalfInt:
        """Coerce an int, a Fraction with denominator 1 or 2, or a string like "3/2"."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator not in (1, 2):
                raise ValueError(f"{value} is not a half-integer")
            return cls(int(value * 2))
        raise TypeError(f"cannot interpret {value!r} as a half-integer")

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def as_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __add__(self, other: Union["HalfInt", int]) -> HalfInt:
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other: Union["HalfInt", int]) -> HalfInt:
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other: Union["HalfInt", int]) -> HalfInt:
        return HalfInt(HalfInt.of(other).twice - self.twice)

    def __neg__(self) -> HalfInt:
        return HalfInt(-self.twice)

    def __abs__(self) -> HalfInt:
        return HalfInt(abs(self.twice))

    def __mul__(self, other: int) -> HalfInt:
        if not isinstance(other, int):
            return NotImplemented
        return HalfInt(self.twice * other)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"


def halfint_range(lo: HalfInt, hi: HalfInt) -> Iterator[HalfInt]:
    """Yield lo, lo+1, ..., hi in unit steps (empty if hi < lo)."""
    t = lo.twice
    while t <= hi.twice:
        yield HalfInt(t)
        t += 2
