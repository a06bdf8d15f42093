"""Dense GF(2) matrices stored as one Python int bitset per row.

Bit ``j`` of a row is the entry in column ``j``. Vectors at the API boundary
are tuples of 0/1.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

Vector = Tuple[int, ...]


def vec_to_int(v: Sequence[int]) -> int:
    out = 0
    for j, x in enumerate(v):
        if x & 1:
            out |= 1 << j
    return out


def int_to_vec(x: int, n: int) -> Vector:
    return tuple((x >> j) & 1 for j in range(n))


class GF2Matrix:
    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[int], ncols: int, nrows: Optional[int] = None):
        rows = list(rows)
        mask = (1 << ncols) - 1
        if any(r & ~mask for r in rows):
            raise ValueError("row has bits beyond ncols")
        if nrows is not None and nrows != len(rows):
            raise ValueError("nrows does not match the number of rows")
        self.rows: Tuple[int, ...] = tuple(rows)
        self.nrows = len(self.rows)
        self.ncols = ncols

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "GF2Matrix":
        return cls([0] * nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls([1 << i for i in range(n)], n)

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> "GF2Matrix":
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        return cls([vec_to_int(r) for r in rows], ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int) -> "GF2Matrix":
        rows = [0] * nrows
        for j, col in enumerate(columns):
            if len(col) != nrows:
                raise ValueError("column length does not match nrows")
            for i, x in enumerate(col):
                if x & 1:
                    rows[i] |= 1 << j
        return cls(rows, len(columns))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def to_lists(self) -> List[List[int]]:
        return [list(int_to_vec(r, self.ncols)) for r in self.rows]

    def column(self, j: int) -> Vector:
        return tuple((r >> j) & 1 for r in self.rows)

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "GF2Matrix":
        return GF2Matrix([vec_to_int(self.column(j)) for j in range(self.ncols)], self.nrows)

    def __matmul__(self, v: Sequence[int]) -> Vector:
        if len(v) != self.ncols:
            raise ValueError(f"vector length {len(v)} != ncols {self.ncols}")
        x = vec_to_int(v)
        return tuple(bin(r & x).count("1") & 1 for r in self.rows)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def __eq__(self, other):
        return (isinstance(other, GF2Matrix) and self.shape == other.shape
                and self.rows == other.rows)

    def __repr__(self):
        return f"GF2Matrix({self.to_lists()!r})"


def _echelon(rows: Sequence[int], ncols: int):
    """Reduced row echelon form with leftmost pivots; returns (rows, pivot columns)."""
    work = [r for r in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        bit = 1 << col
        p = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(M: GF2Matrix) -> int:
    return len(_echelon(M.rows, M.ncols)[1])


def null_space(M: GF2Matrix) -> List[Vector]:
    """Basis of {v : Mv = 0}, one vector per free column in increasing order."""
    rows, pivots = _echelon(M.rows, M.ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.ncols):
        if free in pivot_set:
            continue
        v = 1 << free
        for row, p in zip(rows, pivots):
            if row >> free & 1:
                v |= 1 << p
        basis.append(int_to_vec(v, M.ncols))
    return basis


def independent_columns(M: GF2Matrix) -> List[int]:
    """Indices of the leftmost maximal set of linearly independent columns."""
    return _echelon(M.rows, M.ncols)[1]


def _column_basis(M: GF2Matrix):
    # echelon basis of the column space, pivot = lowest set coordinate
    return _echelon(M.transpose().rows, M.nrows)


def reduce_mod_image(v: Sequence[int], M: GF2Matrix) -> Vector:
    """Canonical representative of ``v`` modulo the column space of ``M``."""
    if len(v) != M.nrows:
        raise ValueError(f"vector length {len(v)} != nrows {M.nrows}")
    x = vec_to_int(v)
    basis, pivots = _column_basis(M)
    for b, p in zip(basis, pivots):
        if x >> p & 1:
            x ^= b
    return int_to_vec(x, M.nrows)


def in_image(v: Sequence[int], M: GF2Matrix) -> bool:
    return not any(reduce_mod_image(v, M))


def solve(M: GF2Matrix, b: Sequence[int]) -> Optional[Vector]:
    """Some x with Mx = b, or None if the system is inconsistent."""
    if len(b) != M.nrows:
        raise ValueError(f"right-hand side length {len(b)} != nrows {M.nrows}")
    n = M.ncols
    aug = [r | ((bi & 1) << n) for r, bi in zip(M.rows, b)]
    rows, pivots = _echelon(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = 0
    for row, p in zip(rows, pivots):
        if row >> n & 1:
            x |= 1 << p
    return int_to_vec(x, n)
