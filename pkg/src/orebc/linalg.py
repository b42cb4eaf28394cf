"""Exact dense linear algebra over a FieldSpec.

Entries are raw field values (``Fraction`` over Q, ``int`` residues over
GF(p)); see :mod:`orebc.scalars`.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .scalars import FieldSpec


class Matrix:
    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: FieldSpec, data: Sequence[Sequence], cols: int = None):
        self.field = field
        self.entries = [[field.convert(v) for v in row] for row in data]
        self.rows = len(self.entries)
        if cols is None:
            cols = len(self.entries[0]) if self.entries else 0
        self.cols = cols
        if any(len(r) != cols for r in self.entries):
            raise ValueError("ragged matrix")

    @classmethod
    def _raw(cls, field, entries, cols):
        m = cls.__new__(cls)
        m.field, m.entries, m.rows, m.cols = field, entries, len(entries), cols
        return m

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls._raw(field, [[field.zero()] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.entries[i][i] = field.one()
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.cols == other.cols and self.entries == other.entries)

    def apply(self, v: Sequence) -> list:
        red = self.field.reduce
        return [red(sum((a * b for a, b in zip(row, v)), self.field.zero())) for row in self.entries]

    def __repr__(self):
        return f"Matrix({self.field}, {self.entries})"


def _rref_rows(F: FieldSpec, rows: List[list], cols: int) -> Tuple[List[list], List[int]]:
    """In-place Gauss-Jordan elimination; first nonzero entry in column order pivots."""
    red, inv = F.reduce, F.inv
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(cols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        piv = prow[c]
        if piv != 1:
            ip = inv(piv)
            prow[:] = [red(v * ip) for v in prow]
        nz = [j for j in range(c, cols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if not f:
                continue
            for j in nz:
                row[j] = red(row[j] - f * prow[j])
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(M: Matrix) -> Tuple[Matrix, List[int]]:
    rows = [list(r) for r in M.entries]
    rows, pivots = _rref_rows(M.field, rows, M.cols)
    return Matrix._raw(M.field, rows, M.cols), pivots


def rank(M: Matrix) -> int:
    return len(rref(M)[1])


def kernel_basis(M: Matrix) -> List[list]:
    """Basis of the right null space, one vector per free column in order.

    Each vector is scaled so that its first nonzero entry is 1.
    """
    F = M.field
    R, pivots = rref(M)
    pivset = set(pivots)
    basis = []
    for f in range(M.cols):
        if f in pivset:
            continue
        v = [F.zero()] * M.cols
        v[f] = F.one()
        for i, pc in enumerate(pivots):
            v[pc] = F.reduce(-R.entries[i][f])
        lead = next(a for a in v if a)
        if lead != 1:
            il = F.inv(lead)
            v = [F.reduce(a * il) for a in v]
        basis.append(v)
    return basis


def kernel_of_columns(F: FieldSpec, columns: Sequence[dict]) -> List[list]:
    """Null space of the matrix whose j-th column is the sparse vector ``columns[j]``.

    ``columns[j]`` maps row keys to raw values; rows are ordered by sorted key.
    """
    keys = sorted({k for col in columns for k in col})
    index = {k: i for i, k in enumerate(keys)}
    zero = F.zero()
    rows = [[zero] * len(columns) for _ in keys]
    for j, col in enumerate(columns):
        for k, v in col.items():
            if v:
                rows[index[k]][j] = v
    return kernel_basis(Matrix._raw(F, rows, len(columns)))
