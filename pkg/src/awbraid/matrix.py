"""Exact matrices over the rational-function field, stored as sparse rows.

These carry every representation-side object: the spin generators, tensor-leg
Casimirs, spectral projectors and normalized braid operators.  All arithmetic
is exact; equality is entrywise equality of canonical rational functions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

from .laurent import LaurentQ
from .ratq import PoleError, RatQ, Scalar

EntryLike = Union[RatQ, LaurentQ, Scalar]


class SpecializationError(ArithmeticError):
    """A rational specialization point hit a pole or a spectral collision."""


class RepMatrix:
    """Square matrix of canonical rational functions, rows stored sparsely."""

    __slots__ = ("dim", "rows")

    def __init__(self, dim: int, rows: Sequence[Mapping[int, EntryLike]] | None = None):
        if dim <= 0:
            raise ValueError("dimension must be positive")
        self.dim = dim
        built: list[dict[int, RatQ]] = []
        if rows is None:
            built = [{} for _ in range(dim)]
        else:
            if len(rows) != dim:
                raise ValueError("row count must equal the dimension")
            for row in rows:
                r: dict[int, RatQ] = {}
                for j, v in row.items():
                    if not 0 <= j < dim:
                        raise ValueError("column index out of range")
                    rv = RatQ.of(v)
                    if not rv.is_zero:
                        r[j] = rv
                built.append(r)
        self.rows = built

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(dim: int) -> RepMatrix:
        return RepMatrix(dim)

    @staticmethod
    def identity(dim: int) -> RepMatrix:
        m = RepMatrix(dim)
        one = RatQ.one()
        for i in range(dim):
            m.rows[i][i] = one
        return m

    @staticmethod
    def diagonal(entries: Sequence[EntryLike]) -> RepMatrix:
        m = RepMatrix(len(entries))
        for i, v in enumerate(entries):
            rv = RatQ.of(v)
            if not rv.is_zero:
                m.rows[i][i] = rv
        return m

    @staticmethod
    def from_function(dim: int, fn: Callable[[int, int], EntryLike]) -> RepMatrix:
        m = RepMatrix(dim)
        for i in range(dim):
            for j in range(dim):
                rv = RatQ.of(fn(i, j))
                if not rv.is_zero:
                    m.rows[i][j] = rv
        return m

    # -- access ----------------------------------------------------------------

    def entry(self, i: int, j: int) -> RatQ:
        return self.rows[i].get(j, RatQ.zero())

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.dim, tuple(tuple(sorted(r.items())) for r in self.rows)))

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other: RepMatrix) -> RepMatrix:
        self._check(other)
        out = RepMatrix(self.dim)
        for i in range(self.dim):
            row = dict(self.rows[i])
            for j, v in other.rows[i].items():
                cur = row.get(j)
                s = v if cur is None else cur + v
                if s.is_zero:
                    row.pop(j, None)
                else:
                    row[j] = s
            out.rows[i] = row
        return out

    def __neg__(self) -> RepMatrix:
        out = RepMatrix(self.dim)
        for i in range(self.dim):
            out.rows[i] = {j: -v for j, v in self.rows[i].items()}
        return out

    def __sub__(self, other: RepMatrix) -> RepMatrix:
        return self + (-other)

    def __matmul__(self, other: RepMatrix) -> RepMatrix:
        self._check(other)
        out = RepMatrix(self.dim)
        orows = other.rows
        for i in range(self.dim):
            acc: dict[int, RatQ] = {}
            for k, a in self.rows[i].items():
                for j, b in orows[k].items():
                    cur = acc.get(j)
                    prod = a * b
                    s = prod if cur is None else cur + prod
                    acc[j] = s
            out.rows[i] = {j: v for j, v in acc.items() if not v.is_zero}
        return out

    def scaled(self, c: EntryLike) -> RepMatrix:
        cv = RatQ.of(c)
        out = RepMatrix(self.dim)
        if cv.is_zero:
            return out
        for i in range(self.dim):
            out.rows[i] = {j: v * cv for j, v in self.rows[i].items()}
        return out

    def shifted(self, c: EntryLike) -> RepMatrix:
        """self + c * identity."""
        cv = RatQ.of(c)
        out = RepMatrix(self.dim)
        for i in range(self.dim):
            row = dict(self.rows[i])
            cur = row.get(i)
            s = cv if cur is None else cur + cv
            if s.is_zero:
                row.pop(i, None)
            else:
                row[i] = s
            out.rows[i] = row
        return out

    def kron(self, other: RepMatrix) -> RepMatrix:
        db = other.dim
        out = RepMatrix(self.dim * db)
        for i1 in range(self.dim):
            arow = self.rows[i1]
            if not arow:
                continue
            for i2 in range(db):
                brow = other.rows[i2]
                if not brow:
                    continue
                target = out.rows[i1 * db + i2]
                for j1, a in arow.items():
                    base = j1 * db
                    for j2, b in brow.items():
                        target[base + j2] = a * b
        return out

    def trace(self) -> RatQ:
        total = RatQ.zero()
        for i in range(self.dim):
            v = self.rows[i].get(i)
            if v is not None:
                total = total + v
        return total

    def transpose_index(self) -> list[dict[int, RatQ]]:
        cols: list[dict[int, RatQ]] = [{} for _ in range(self.dim)]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                cols[j][i] = v
        return cols

    def commutes_with(self, other: RepMatrix) -> bool:
        return self @ other == other @ self

    # -- specialization ------------------------------------------------------------

    def specialize(self, q0: Fraction) -> list[dict[int, Fraction]]:
        """Entrywise exact evaluation at q = q0; raises SpecializationError on a pole."""
        out: list[dict[int, Fraction]] = []
        for row in self.rows:
            r: dict[int, Fraction] = {}
            for j, v in row.items():
                try:
                    f = v.evaluate(q0)
                except PoleError as exc:
                    raise SpecializationError(str(exc)) from exc
                if f:
                    r[j] = f
            out.append(r)
        return out

    def _check(self, other: RepMatrix) -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch {self.dim} vs {other.dim}")

    def __repr__(self) -> str:
        return f"RepMatrix(dim={self.dim}, nnz={self.nnz()})"


def mat_product(factors: Iterable[RepMatrix]) -> RepMatrix:
    it = iter(factors)
    try:
        out = next(it)
    except StopIteration:
        raise ValueError("empty product needs an explicit identity")
    for m in it:
        out = out @ m
    return out


def commutator(a: RepMatrix, b: RepMatrix) -> RepMatrix:
    return a @ b - b @ a


def q_commutator(a: RepMatrix, b: RepMatrix) -> RepMatrix:
    """[a, b]_q = q a b - q^-1 b a."""
    return (a @ b).scaled(LaurentQ.q_power(1)) - (b @ a).scaled(LaurentQ.q_power(-1))
