"""Level paths: the combinatorial skeleton of projector-sandwich elements.

A path is a finite sequence of levels in [0, 2s] moving by at most one unit per
step.  A path of length zero is a bare level projector; longer paths alternate
level projectors with middle-strand Casimir factors.  Flat edges, dips and
peaks contract to polynomial factors in the central element, which is how the
whole quotient algebra is computed.
"""

from __future__ import annotations

import dataclasses
from typing import Iterator, Sequence

from .halfint import HalfInt


@dataclasses.dataclass(frozen=True, order=True)
class Path:
    """A nonempty unit-step level sequence; length counts edges, not dots."""

    levels: tuple[int, ...]

    def __post_init__(self):
        if not self.levels:
            raise ValueError("a path needs at least one level")
        for lv in self.levels:
            if lv < 0:
                raise ValueError("levels are non-negative")
        for x, y in zip(self.levels, self.levels[1:]):
            if abs(x - y) > 1:
                raise ValueError(f"step {x} -> {y} is not a unit step")

    @staticmethod
    def of(levels: Sequence[int]) -> Path:
        return Path(tuple(int(x) for x in levels))

    @property
    def first(self) -> int:
        return self.levels[0]

    @property
    def last(self) -> int:
        return self.levels[-1]

    @property
    def length(self) -> int:
        return len(self.levels) - 1

    def max_level(self) -> int:
        return max(self.levels)

    def fits(self, s: HalfInt) -> bool:
        return self.max_level() <= s.twice

    def concat(self, other: Path) -> Path:
        """Horizontal concatenation; endpoints must match (they are merged)."""
        if self.last != other.first:
            raise ValueError(f"cannot glue a path ending at {self.last} to one starting at {other.first}")
        return Path(self.levels[:-1] + other.levels)

    def is_strictly_monotone(self) -> bool:
        steps = {y - x for x, y in zip(self.levels, self.levels[1:])}
        return steps <= {1} or steps <= {-1}

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.levels)


def monotone_path(a: int, c: int) -> Path:
    """The unique shortest path from a to c."""
    step = 1 if c >= a else -1
    return Path(tuple(range(a, c + step, step)))


def enumerate_paths(a: int, c: int, length: int, s: HalfInt) -> list[Path]:
    """All paths of the given length from a to c inside [0, 2s], lexicographically."""
    top = s.twice
    if not (0 <= a <= top and 0 <= c <= top) or length < 0:
        raise ValueError("endpoints must be levels and the length non-negative")
    out: list[Path] = []
    prefix = [a]

    def walk(level: int, remaining: int) -> None:
        if remaining == 0:
            if level == c:
                out.append(Path(tuple(prefix)))
            return
        for nxt in (level - 1, level, level + 1):
            if 0 <= nxt <= top and abs(nxt - c) <= remaining - 1:
                prefix.append(nxt)
                walk(nxt, remaining - 1)
                prefix.pop()

    walk(a, length)
    return out


def loop_ladder(a: int) -> list[Path]:
    """The 2a+1 loops at level a with lengths 0..2a: ever deeper dips, bottoms doubled.

    Index 2k is the dip to depth k; index 2k+1 repeats its bottom level once.
    """
    paths = [Path((a,))]
    for k in range(a + 1):
        down = tuple(range(a, a - k - 1, -1))
        up = tuple(range(a - k, a + 1))
        if k > 0:
            paths.append(Path(down + up[1:]))
        if len(paths) - 1 < 2 * a:
            paths.append(Path(down + (a - k,) + up[1:]))
    return paths


def cell_paths(a: int, c: int, s: HalfInt) -> list[Path]:
    """The path-basis cell from a to c: loops at the lower endpoint glued to the direct path."""
    top = s.twice
    if not (0 <= a <= top and 0 <= c <= top):
        raise ValueError("endpoints must be levels")
    max_loop = top - abs(a - c)
    straight = monotone_path(a, c)
    if a <= c:
        return [loop.concat(straight) for loop in loop_ladder(a) if loop.length <= max_loop]
    return [straight.concat(loop) for loop in loop_ladder(c) if loop.length <= max_loop]
