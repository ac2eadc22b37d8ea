"""Exact rational scalars and sparse rational linear algebra.

Everything downstream (normal forms, subspace computations, cohomology)
reduces to kernels, ranks and solves over the rationals, so this module
works exclusively with ``fractions.Fraction`` (arbitrary-precision,
always in lowest terms with positive denominator) and never touches
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(value) -> Fraction:
    """Coerce ints, strings like ``"-3/4"``, or Fractions to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_scalar(q: Fraction) -> str:
    """Serialize as ``"p/q"`` (or ``"p"`` when q = 1), sign on the numerator."""
    return str(q)


class Matrix:
    """Sparse rational matrix; entries stored as (row, col) -> nonzero Fraction."""

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries: dict[tuple[int, int], Fraction] = {}
        if entries:
            for (i, j), v in entries.items():
                self[i, j] = scalar(v)

    @classmethod
    def from_rows(cls, data: Sequence[Sequence]) -> "Matrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        m = cls(rows, cols)
        for i, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                m[i, j] = scalar(v)
        return m

    @classmethod
    def from_columns(cls, columns: Sequence[dict[int, Fraction]], rows: int) -> "Matrix":
        """Build from sparse columns (dicts row -> value)."""
        m = cls(rows, len(columns))
        for j, col in enumerate(columns):
            for i, v in col.items():
                m[i, j] = v
        return m

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, {(i, i): ONE for i in range(n)})

    def __getitem__(self, key) -> Fraction:
        return self.entries.get(key, ZERO)

    def __setitem__(self, key, value):
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        v = scalar(value)
        if v == 0:
            self.entries.pop(key, None)
        else:
            self.entries[key] = v

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {len(self.entries)} nonzero)"

    def copy(self) -> "Matrix":
        m = Matrix(self.rows, self.cols)
        m.entries = dict(self.entries)
        return m

    def to_lists(self) -> list[list[Fraction]]:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def mul_vector(self, vec: Sequence[Fraction]) -> list[Fraction]:
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        out = [ZERO] * self.rows
        for (i, j), v in self.entries.items():
            c = vec[j]
            if c:
                out[i] += v * c
        return out

    # -- echelon machinery -------------------------------------------------

    def _sparse_rows(self) -> list[dict[int, Fraction]]:
        rows: list[dict[int, Fraction]] = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def row_echelon(self):
        """Reduced row echelon form.

        Returns (rref rows as sparse dicts, pivot column list). Columns are
        eliminated left to right, so ``pivots[:k]`` restricted to columns
        < c gives the rank profile of every column prefix.
        """
        rows = [r for r in self._sparse_rows() if r]
        pivots: list[int] = []
        reduced: list[dict[int, Fraction]] = []
        for col in range(self.cols):
            # pick the sparsest available row with a nonzero entry in col
            best = None
            for idx, r in enumerate(rows):
                if col in r and (best is None or len(r) < len(rows[best])):
                    best = idx
            if best is None:
                continue
            piv = rows.pop(best)
            inv = ONE / piv[col]
            piv = {c: v * inv for c, v in piv.items()}
            survivors = []
            for r in rows:
                f = r.get(col)
                if f:
                    r = _row_axpy(r, piv, -f)
                if r:
                    survivors.append(r)
            rows = survivors
            for r in reduced:
                f = r.get(col)
                if f:
                    updated = _row_axpy(r, piv, -f)
                    r.clear()
                    r.update(updated)
            reduced.append(piv)
            pivots.append(col)
        return reduced, pivots

    def rank(self) -> int:
        return len(self.row_echelon()[1])

    def kernel_basis(self) -> list[list[Fraction]]:
        """Basis of the right null space, one vector per free column.

        The vector for free column f has 1 in position f, solved entries at
        pivot columns, zeros elsewhere; vectors are listed by increasing f.
        """
        reduced, pivots = self.row_echelon()
        pivot_set = set(pivots)
        pivot_row = {col: r for col, r in zip(pivots, reduced)}
        basis = []
        for f in range(self.cols):
            if f in pivot_set:
                continue
            vec = [ZERO] * self.cols
            vec[f] = ONE
            for col in pivots:
                coeff = pivot_row[col].get(f)
                if coeff:
                    vec[col] = -coeff
            basis.append(vec)
        return basis

    def solve(self, rhs: Sequence[Fraction]):
        """One solution of self * x = rhs, or None when inconsistent."""
        if len(rhs) != self.rows:
            raise ValueError("dimension mismatch")
        aug = Matrix(self.rows, self.cols + 1)
        aug.entries = dict(self.entries)
        for i, v in enumerate(rhs):
            if v:
                aug.entries[(i, self.cols)] = scalar(v)
        reduced, pivots = aug.row_echelon()
        if self.cols in pivots:
            return None
        x = [ZERO] * self.cols
        for col, row in zip(pivots, reduced):
            x[col] = row.get(self.cols, ZERO)
        return x

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("not square")
        n = self.rows
        aug = Matrix(n, 2 * n)
        aug.entries = dict(self.entries)
        for i in range(n):
            aug.entries[(i, n + i)] = ONE
        reduced, pivots = aug.row_echelon()
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        inv = Matrix(n, n)
        for row_idx, col in enumerate(pivots[:n]):
            for c, v in reduced[row_idx].items():
                if c >= n:
                    inv[col, c - n] = v
        return inv


def _row_axpy(r: dict[int, Fraction], piv: dict[int, Fraction], f: Fraction) -> dict[int, Fraction]:
    """r + f * piv, dropping zeros."""
    out = dict(r)
    for c, v in piv.items():
        s = out.get(c, ZERO) + f * v
        if s:
            out[c] = s
        else:
            out.pop(c, None)
    return out


def rank_of_columns(columns: Iterable[dict[int, Fraction]], nrows: int) -> int:
    return Matrix.from_columns(list(columns), nrows).rank()


def reduce_to_basis(vectors: list[list[Fraction]]) -> list[list[Fraction]]:
    """Canonical (reduced-echelon) basis of the span of the given vectors."""
    if not vectors:
        return []
    m = Matrix.from_rows(vectors)
    reduced, pivots = m.row_echelon()
    out = []
    for row in reduced:
        vec = [ZERO] * m.cols
        for c, v in row.items():
            vec[c] = v
        out.append(vec)
    return out


def in_span(basis: list[list[Fraction]], vec: list[Fraction]) -> bool:
    if not basis:
        return all(v == 0 for v in vec)
    cols = [{i: v for i, v in enumerate(b) if v} for b in basis]
    m = Matrix.from_columns(cols, len(vec))
    return m.solve(list(vec)) is not None
