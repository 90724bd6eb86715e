"""Exact linear algebra over the rationals.

All scalars are `fractions.Fraction`, so ranks, kernels and echelon forms
are computed exactly. Matrices in this package are small and dense (at most
a few hundred columns), so Gauss-Jordan elimination with normalized pivots
is fast enough and, crucially, yields the *unique* reduced row echelon
form. Downstream code relies on that uniqueness: two subspaces are equal
exactly when their canonical bases are identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class QMatrix:
    """Immutable dense matrix of rationals, stored row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, entries: Iterable) -> None:
        data = tuple(x if isinstance(x, Fraction) else Fraction(x) for x in entries)
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(data) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(data)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "QMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat = [x for row in rows for x in row]
        return cls(nrows, ncols, flat)

    def row(self, i: int) -> tuple:
        return self.data[i * self.cols : (i + 1) * self.cols]

    def entry(self, i: int, j: int) -> Rational:
        return self.data[i * self.cols + j]

    def mul_vector(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        out = []
        for i in range(self.rows):
            row = self.row(i)
            out.append(sum((a * b for a, b in zip(row, v)), ZERO))
        return tuple(out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        return f"QMatrix({self.rows}x{self.cols})"


def rref(m: QMatrix) -> tuple[QMatrix, tuple[int, ...]]:
    """Reduced row echelon form of `m` and its pivot column indices.

    The result is the canonical rref: pivot entries are 1 with zeros above
    and below, so row-equivalent matrices produce equal output.
    """
    a = [list(m.row(i)) for i in range(m.rows)]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        p = None
        for i in range(r, m.rows):
            if a[i][c]:
                p = i
                break
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        pv = a[r][c]
        if pv != 1:
            inv = ONE / pv
            a[r] = [x * inv for x in a[r]]
        row_r = a[r]
        for i in range(m.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], row_r)]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    flat = [x for row in a for x in row]
    return QMatrix(m.rows, m.cols, flat), tuple(pivots)


def rank(m: QMatrix) -> int:
    """Number of pivots of rref(m)."""
    _, pivots = rref(m)
    return len(pivots)


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^ambient_dim in canonical (rref) form.

    `basis` holds the nonzero rows of the reduced echelon form of any
    spanning set, so equal subspaces compare equal as values.
    """

    ambient_dim: int
    basis: tuple[tuple[Rational, ...], ...]

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [tuple(x if isinstance(x, Fraction) else Fraction(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        vecs = [v for v in vecs if any(v)]
        if not vecs:
            return cls(ambient_dim, ())
        red, _ = rref(QMatrix.from_rows(vecs))
        rows = tuple(red.row(i) for i in range(red.rows) if any(red.row(i)))
        return cls(ambient_dim, rows)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, vector: Sequence) -> tuple:
        """Residue of `vector` after eliminating along the canonical basis."""
        if len(vector) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        v = [x if isinstance(x, Fraction) else Fraction(x) for x in vector]
        for row in self.basis:
            lead = next(j for j, x in enumerate(row) if x)
            c = v[lead]
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        return tuple(v)

    def contains_vector(self, vector: Sequence) -> bool:
        return not any(self.reduce(vector))

    def contains(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimensions differ")
        return all(self.contains_vector(b) for b in other.basis)


def kernel_basis(m: QMatrix) -> Subspace:
    """Canonical basis of the right null space {v : m v = 0}."""
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    vecs = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -red.entry(i, f)
        vecs.append(v)
    return Subspace.from_vectors(m.cols, vecs)


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    """Whether two canonical subspaces coincide; ambient dims must match."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimensions differ")
    return a.basis == b.basis
