"""Fraction-free sparse Gaussian elimination and exact span arithmetic.

Rank and null-space dimensions are computed over Q with integer rows (each row
rescaled to primitive integers, contents stripped after every combination), so
there is no rounding anywhere.  A small generic reduced-echelon solver handles
expansion of vectors in a given span over any exact field (Fraction or RatQ).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Generic, Hashable, Iterable, Mapping, Sequence, TypeVar

T = TypeVar("T")


def _int_row(row: Mapping[int, Fraction]) -> dict[int, int]:
    """Rescale a rational row to primitive integers."""
    if not row:
        return {}
    den_lcm = 1
    for v in row.values():
        den_lcm = den_lcm * v.denominator // gcd(den_lcm, v.denominator)
    ints = {j: int(v * den_lcm) for j, v in row.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    return {j: v // g for j, v in ints.items()}


def _strip_content(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {j: v // g for j, v in row.items()}


def sparse_rank(rows: Iterable[Mapping[int, Fraction]]) -> int:
    """Rank over Q of a sparse system, by content-stripped integer elimination.

    Pivots are chosen to approximately minimize fill (shortest column, then
    shortest row), which keeps the weight-graded commutation systems sparse.
    """
    active: dict[int, dict[int, int]] = {}
    col_rows: dict[int, set[int]] = {}
    for rid, row in enumerate(rows):
        r = _int_row(row)
        if r:
            active[rid] = r
            for j in r:
                col_rows.setdefault(j, set()).add(rid)
    rank = 0
    while active:
        # pivot column: fewest active rows; pivot row: fewest entries, smallest pivot
        col = min(col_rows, key=lambda j: (len(col_rows[j]), j))
        users = col_rows[col]
        prow_id = min(users, key=lambda rid: (len(active[rid]), abs(active[rid][col])))
        pivot = active.pop(prow_id)
        for j in pivot:
            users_j = col_rows.get(j)
            if users_j is not None:
                users_j.discard(prow_id)
                if not users_j:
                    del col_rows[j]
        rank += 1
        p = pivot[col]
        for rid in list(col_rows.get(col, ())):
            row = active[rid]
            a = row[col]
            g = gcd(a, p)
            mult_p, mult_a = p // g, a // g
            for j in row:
                users_j = col_rows.get(j)
                if users_j is not None:
                    users_j.discard(rid)
                    if not users_j:
                        del col_rows[j]
            new: dict[int, int] = {}
            for j, v in row.items():
                new[j] = v * mult_p
            for j, v in pivot.items():
                nv = new.get(j, 0) - mult_a * v
                if nv:
                    new[j] = nv
                else:
                    new.pop(j, None)
            if new:
                new = _strip_content(new)
                active[rid] = new
                for j in new:
                    col_rows.setdefault(j, set()).add(rid)
            else:
                del active[rid]
    return rank


def sparse_nullity(rows: Iterable[Mapping[int, Fraction]], nvars: int) -> int:
    return nvars - sparse_rank(rows)


class SpanSolver(Generic[T]):
    """Reduced echelon form of a row family over an exact field, with coordinates.

    Supports rank queries and exact expansion of new vectors as linear
    combinations of the original rows.  The element type needs +, -, *, /,
    truthiness, and a multiplicative identity.
    """

    def __init__(self, one: T):
        self._one = one
        # pivot column -> (reduced row, combination over original row indices)
        self._pivots: dict[int, tuple[dict[int, T], dict[int, T]]] = {}
        self._count = 0

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def _reduce(self, vec: Mapping[int, T]) -> tuple[dict[int, T], dict[int, T]]:
        row = {j: v for j, v in vec.items() if v}
        combo: dict[int, T] = {}
        for col in sorted(row):
            hit = self._pivots.get(col)
            if hit is None:
                continue
            prow, pcombo = hit
            factor = row.get(col)
            if not factor:
                continue
            for j, v in prow.items():
                nv = row.get(j)
                nv = -factor * v if nv is None else nv - factor * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
            for j, v in pcombo.items():
                nv = combo.get(j)
                nv = -factor * v if nv is None else nv - factor * v
                if nv:
                    combo[j] = nv
                else:
                    combo.pop(j, None)
        return row, combo

    def add_row(self, vec: Mapping[int, T]) -> bool:
        """Insert a vector; returns True if it enlarged the span."""
        idx = self._count
        self._count += 1
        row, combo = self._reduce(vec)
        combo[idx] = combo.get(idx, self._one - self._one) + self._one
        if not row:
            return False
        col = min(row)
        inv = self._one / row[col]
        row = {j: v * inv for j, v in row.items()}
        combo = {j: v * inv for j, v in combo.items()}
        # back-substitute into existing pivot rows to keep the form reduced
        for pcol, (prow, pcombo) in list(self._pivots.items()):
            f = prow.get(col)
            if not f:
                continue
            for j, v in row.items():
                nv = prow.get(j)
                nv = -f * v if nv is None else nv - f * v
                if nv:
                    prow[j] = nv
                else:
                    prow.pop(j, None)
            for j, v in combo.items():
                nv = pcombo.get(j)
                nv = -f * v if nv is None else nv - f * v
                if nv:
                    pcombo[j] = nv
                else:
                    pcombo.pop(j, None)
        self._pivots[col] = (row, combo)
        return True

    def expand(self, vec: Mapping[int, T]) -> dict[int, T] | None:
        """Coordinates of vec over the inserted rows, or None if outside the span.

        Coordinates refer to insertion indices of rows that enlarged the span.
        """
        row, combo = self._reduce(vec)
        if row:
            return None
        return {j: -v for j, v in combo.items() if v}
