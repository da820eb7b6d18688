"""Exact dense matrices over the active field.

Row reduction pivots on the first nonzero entry in row order; over an exact
field there is no numerical reason to prefer one pivot over another, and a
fixed rule keeps kernels and quotient representatives deterministic.
"""

from __future__ import annotations

from typing import Sequence

from .errors import DimensionMismatch
from .scalars import FieldMode, GENERIC

Vector = tuple


class ExactMatrix:
    __slots__ = ("rows", "nrows", "ncols", "mode")

    def __init__(self, rows: Sequence[Sequence], mode: FieldMode = GENERIC, ncols: int | None = None):
        self.mode = mode
        self.rows = [[mode.coerce(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise DimensionMismatch("ragged matrix")

    @classmethod
    def zeros(cls, nrows: int, ncols: int, mode: FieldMode = GENERIC) -> "ExactMatrix":
        z = mode.zero
        return cls([[z] * ncols for _ in range(nrows)], mode, ncols)

    @classmethod
    def identity(cls, n: int, mode: FieldMode = GENERIC) -> "ExactMatrix":
        m = cls.zeros(n, n, mode)
        for i in range(n):
            m.rows[i][i] = mode.one
        return m

    @classmethod
    def diagonal(cls, entries: Sequence, mode: FieldMode = GENERIC) -> "ExactMatrix":
        m = cls.zeros(len(entries), len(entries), mode)
        for i, x in enumerate(entries):
            m.rows[i][i] = mode.coerce(x)
        return m

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def copy(self) -> "ExactMatrix":
        return ExactMatrix([list(r) for r in self.rows], self.mode, self.ncols)

    def with_entry(self, i: int, j: int, value) -> "ExactMatrix":
        m = self.copy()
        m.rows[i][j] = self.mode.coerce(value)
        return m

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def is_zero(self) -> bool:
        return not any(x for row in self.rows for x in row)

    def is_diagonal(self) -> bool:
        return all(not self.rows[i][j] for i in range(self.nrows)
                   for j in range(self.ncols) if i != j)

    def diagonal_entries(self) -> list:
        return [self.rows[i][i] for i in range(min(self.shape))]

    def scalar_value(self):
        """The scalar c when this matrix equals c times the identity, else None."""
        if self.nrows != self.ncols or not self.is_diagonal():
            return None
        diag = self.diagonal_entries()
        if not diag:
            return self.mode.zero
        return diag[0] if all(x == diag[0] for x in diag) else None

    def _check_same(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same(other)
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                           self.mode, self.ncols)

    def __sub__(self, other):
        self._check_same(other)
        return ExactMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                           self.mode, self.ncols)

    def __neg__(self):
        return ExactMatrix([[-a for a in r] for r in self.rows], self.mode, self.ncols)

    def scale(self, c) -> "ExactMatrix":
        c = self.mode.coerce(c)
        return ExactMatrix([[a * c for a in r] for r in self.rows], self.mode, self.ncols)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.mode.zero
        cols = other.columns()
        out = []
        for row in self.rows:
            nz = [(k, a) for k, a in enumerate(row) if a]
            out_row = []
            for col in cols:
                acc = zero
                for k, a in nz:
                    b = col[k]
                    if b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return ExactMatrix(out, self.mode, other.ncols)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatch("vector length does not match column count")
        zero = self.mode.zero
        out = []
        for row in self.rows:
            acc = zero
            for a, b in zip(row, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def __pow__(self, n: int) -> "ExactMatrix":
        result = ExactMatrix.identity(self.nrows, self.mode)
        for _ in range(n):
            result = result @ self
        return result

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([list(c) for c in self.columns()], self.mode, self.nrows)

    def columns(self) -> list[Vector]:
        return [tuple(self.rows[i][j] for i in range(self.nrows)) for j in range(self.ncols)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix([[self.rows[i][j] for j in cols] for i in rows], self.mode, len(cols))

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        n, m = other.shape
        out = [[self.mode.zero] * (self.ncols * m) for _ in range(self.nrows * n)]
        for i, row in enumerate(self.rows):
            for j, a in enumerate(row):
                if not a:
                    continue
                for k in range(n):
                    for l in range(m):
                        b = other.rows[k][l]
                        if b:
                            out[i * n + k][j * m + l] = a * b
        return ExactMatrix(out, self.mode, self.ncols * m)

    def rref(self) -> tuple["ExactMatrix", list[int]]:
        """Reduced row echelon form and the list of pivot columns."""
        rows = [list(r) for r in self.rows]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            pivot_row = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            inv = 1 / rows[r][c]
            rows[r] = [x * inv if x else x for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    factor = rows[i][c]
                    rows[i] = [a - factor * b if b else a for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        return ExactMatrix(rows, self.mode, self.ncols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self.rows)
        return f"ExactMatrix([{body}])"


def kernel(m: ExactMatrix) -> list[Vector]:
    """Basis of the null space, in reduced echelon form."""
    reduced, pivots = m.rref()
    zero, one = m.mode.zero, m.mode.one
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * m.ncols
        v[f] = one
        for row_idx, pc in enumerate(pivots):
            v[pc] = -reduced.rows[row_idx][f]
        basis.append(tuple(v))
    return echelon_basis(basis, m.mode, m.ncols)


def image(m: ExactMatrix) -> list[Vector]:
    """Basis of the column space: the pivot columns of ``m`` itself."""
    _, pivots = m.rref()
    cols = m.columns()
    return [cols[c] for c in pivots]


def echelon_basis(vectors: Sequence[Vector], mode: FieldMode, dim: int) -> list[Vector]:
    """Reduced echelon basis of the span (unit vectors come out as unit vectors)."""
    if not vectors:
        return []
    reduced, pivots = ExactMatrix(vectors, mode, dim).rref()
    return [tuple(reduced.rows[i]) for i in range(len(pivots))]


def span_rank(vectors: Sequence[Vector], mode: FieldMode, dim: int) -> int:
    if not vectors:
        return 0
    return ExactMatrix(vectors, mode, dim).rank()


def intersection_dim(a: Sequence[Vector], b: Sequence[Vector], mode: FieldMode, dim: int) -> int:
    """``dim(span a ∩ span b)`` for bases ``a`` and ``b``."""
    return len(a) + len(b) - span_rank(list(a) + list(b), mode, dim)


def quotient_basis(sub: Sequence[Vector], space: Sequence[Vector], mode: FieldMode,
                   dim: int) -> list[Vector]:
    """Representatives of a basis of ``span(space) / (span(space) ∩ span(sub))``.

    Standard basis vectors lying in ``span(space)`` are tried first, so that
    representatives are plain basis vectors whenever possible.
    """
    zero, one = mode.zero, mode.one
    space = list(space)
    space_rank = span_rank(space, mode, dim)
    candidates = []
    for i in range(dim):
        e = tuple(one if j == i else zero for j in range(dim))
        if space and span_rank(space + [e], mode, dim) == space_rank:
            candidates.append(e)
    candidates.extend(space)
    chosen: list[Vector] = []
    current = list(sub)
    current_rank = span_rank(current, mode, dim)
    # rank of sub + chosen grows by exactly dim(space) - dim(space ∩ sub)
    for v in candidates:
        r = span_rank(current + [v], mode, dim)
        if r > current_rank:
            chosen.append(v)
            current.append(v)
            current_rank = r
    return chosen
