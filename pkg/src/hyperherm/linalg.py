"""Small exact matrix algebra used by the linear-model and Lie-group layers.

Matrices act on column vectors: the j-th column of M holds the image of the
j-th basis vector, so operator composition is the usual matrix product.
"""

from __future__ import annotations

from fractions import Fraction

from .tensors import Tensor


class Matrix:
    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged matrix")
        self.rows = rows

    # -- construction -------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "Matrix":
        m = n if m is None else m
        return cls(((0,) * m,) * n)

    @classmethod
    def diagonal(cls, entries) -> "Matrix":
        entries = tuple(entries)
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_function(cls, n: int, m: int, fn) -> "Matrix":
        return cls(tuple(tuple(fn(i, j) for j in range(m)) for i in range(n)))

    # -- shape / access -----------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int):
        return tuple(r[j] for r in self.rows)

    # -- algebra ------------------------------------------------------

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        ocols = list(zip(*other.rows))
        return Matrix(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in ocols) for row in self.rows)
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)))

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(tuple(-a for a in r) for r in self.rows))

    def scale(self, s) -> "Matrix":
        return Matrix(tuple(tuple(s * a for a in r) for r in self.rows))

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.rows)))

    def apply(self, vec):
        """Matrix-vector product (column convention)."""
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * v for a, v in zip(row, vec)) for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.nrows != other.nrows or self.ncols != other.ncols:
            return False
        return all(a == b for r1, r2 in zip(self.rows, other.rows) for a, b in zip(r1, r2))

    def __hash__(self):
        return hash((self.nrows, self.ncols))

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.rows for a in r)

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.transpose()

    def to_tensor(self, variance: str) -> Tensor:
        if not self.is_square():
            raise ValueError("only square matrices convert to tensors")
        n = self.nrows
        return Tensor(n, variance, (self.rows[i][j] for i in range(n) for j in range(n)))

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols})"


def from_tensor(t: Tensor) -> Matrix:
    if t.rank != 2:
        raise ValueError("need a rank-2 tensor")
    return Matrix(tuple(tuple(t[i, j] for j in range(t.dim)) for i in range(t.dim)))


def signature(m: Matrix) -> tuple[int, int, int]:
    """Signature (positive, negative, zero) of a symmetric rational matrix.

    Computed exactly by symmetric Gaussian elimination (a congruence
    transform), never by a numeric eigensolve.
    """
    if not m.is_symmetric():
        raise ValueError("signature requires a symmetric matrix")
    n = m.nrows
    a = [[Fraction(m[i, j]) for j in range(n)] for i in range(n)]

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]

    def add_into(i, j, f):
        # row_i += f*row_j followed by the matching column operation
        for k in range(n):
            a[i][k] += f * a[j][k]
        for k in range(n):
            a[k][i] += f * a[k][j]

    for k in range(n):
        if a[k][k] == 0:
            pivot = next((p for p in range(k + 1, n) if a[p][p] != 0), None)
            if pivot is not None:
                swap(k, pivot)
            else:
                off = next(
                    ((p, q) for p in range(k, n) for q in range(p + 1, n) if a[p][q] != 0),
                    None,
                )
                if off is None:
                    break  # remaining block is zero
                p, q = off
                add_into(p, q, Fraction(1))  # makes a[p][p] = 2*a[p][q] != 0
                if p != k:
                    swap(k, p)
        for i in range(k + 1, n):
            if a[i][k] != 0:
                add_into(i, k, -a[i][k] / a[k][k])

    pos = sum(1 for i in range(n) if a[i][i] > 0)
    neg = sum(1 for i in range(n) if a[i][i] < 0)
    return pos, neg, n - pos - neg
