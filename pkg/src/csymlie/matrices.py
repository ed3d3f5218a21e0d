"""Exact dense matrices over Q or Q(i).

Everything here is plain list-of-lists arithmetic over exact scalars.  The
algebras in this package have dimension at most sixteen, so clarity wins
over asymptotics.  Determinants go through fraction-free (Bareiss)
elimination; signatures through symmetric congruence diagonalization.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .scalars import GaussianRational, Scalar, to_gaussian


class Matrix:
    """Immutable exact matrix."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence[Scalar]]):
        r = tuple(tuple(e for e in row) for row in rows)
        if r and any(len(row) != len(r[0]) for row in r):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", r)
        object.__setattr__(self, "nrows", len(r))
        object.__setattr__(self, "ncols", len(r[0]) if r else 0)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def zero(nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        return Matrix([[Fraction(0)] * ncols for _ in range(nrows)])

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(
            [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def from_columns(cols: Sequence[Sequence[Scalar]]) -> "Matrix":
        n = len(cols[0])
        return Matrix([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.nrows != other.nrows or self.ncols != other.ncols:
            return False
        return all(
            self.rows[i][j] == other.rows[i][j]
            for i in range(self.nrows)
            for j in range(self.ncols)
        )

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in row) for row in self.rows)
        return f"Matrix[{body}]"

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return all(not e for row in self.rows for e in row)

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def symmetry_witness(self) -> tuple[int, int] | None:
        """First (i, j) with m[i][j] != m[j][i], or None."""
        for i in range(self.nrows):
            for j in range(i + 1, self.ncols):
                if self.rows[i][j] != self.rows[j][i]:
                    return (i, j)
        return None

    def is_antisymmetric(self) -> bool:
        return self.is_square() and all(
            self.rows[i][j] == -self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i, self.ncols)
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._need_shape(other)
        return Matrix(
            [
                [self.rows[i][j] + other.rows[i][j] for j in range(self.ncols)]
                for i in range(self.nrows)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._need_shape(other)
        return Matrix(
            [
                [self.rows[i][j] - other.rows[i][j] for j in range(self.ncols)]
                for i in range(self.nrows)
            ]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-e for e in row] for row in self.rows])

    def scale(self, c: Scalar) -> "Matrix":
        return Matrix([[c * e for e in row] for row in self.rows])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in product")
        ocols = list(zip(*other.rows)) if other.rows else []
        return Matrix(
            [
                [sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in ocols]
                for row in self.rows
            ]
        )

    def matvec(self, v: Sequence[Scalar]) -> list[Scalar]:
        if self.ncols != len(v):
            raise ValueError("shape mismatch in matvec")
        return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.rows]

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows))) if self.rows else self

    def map(self, fn: Callable[[Scalar], Scalar]) -> "Matrix":
        return Matrix([[fn(e) for e in row] for row in self.rows])

    def to_gaussian(self) -> "Matrix":
        return self.map(to_gaussian)

    def column(self, j: int) -> list[Scalar]:
        return [row[j] for row in self.rows]

    def _need_shape(self, other: "Matrix") -> None:
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("shape mismatch")

    # -- elimination-based kernels ------------------------------------

    def det(self) -> Scalar:
        """Determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square():
            raise ValueError("determinant of non-square matrix")
        n = self.nrows
        if n == 0:
            return Fraction(1)
        a = [list(row) for row in self.rows]
        sign = 1
        prev = Fraction(1)
        for k in range(n - 1):
            if not a[k][k]:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return Fraction(0)
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
                a[i][k] = Fraction(0)
            prev = a[k][k]
        d = a[n - 1][n - 1]
        return -d if sign < 0 else d

    def rref(self) -> "Matrix":
        """Reduced row echelon form with leftmost-pivot order."""
        a = [list(row) for row in self.rows]
        nr, nc = self.nrows, self.ncols
        piv_row = 0
        for col in range(nc):
            pivot = None
            for r in range(piv_row, nr):
                if a[r][col]:
                    pivot = r
                    break
            if pivot is None:
                continue
            a[piv_row], a[pivot] = a[pivot], a[piv_row]
            inv = a[piv_row][col]
            a[piv_row] = [e / inv for e in a[piv_row]]
            for r in range(nr):
                if r != piv_row and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[piv_row])]
            piv_row += 1
            if piv_row == nr:
                break
        return Matrix(a)

    def rank(self) -> int:
        r = self.rref()
        return sum(1 for row in r.rows if any(row))

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise ValueError("inverse of non-square matrix")
        n = self.nrows
        a = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)]
             for i, row in enumerate(self.rows)]
        aug = Matrix(a).rref()
        for i in range(n):
            if aug.rows[i][i] != 1:
                raise ValueError("matrix is singular")
        return Matrix([row[n:] for row in aug.rows])

    def kernel_basis(self) -> list[list[Scalar]]:
        """Basis of the right kernel, read off the reduced echelon form."""
        r = self.rref()
        nc = self.ncols
        pivots: dict[int, int] = {}
        for i, row in enumerate(r.rows):
            for j, e in enumerate(row):
                if e:
                    pivots[j] = i
                    break
        free = [j for j in range(nc) if j not in pivots]
        basis = []
        for f in free:
            v: list[Scalar] = [Fraction(0)] * nc
            v[f] = Fraction(1)
            for j, i in pivots.items():
                v[j] = -r.rows[i][f]
            basis.append(v)
        return basis

    def solve(self, b: Sequence[Scalar]) -> list[Scalar]:
        """Solve self @ x = b exactly; raises if inconsistent or underdetermined."""
        if self.nrows != len(b):
            raise ValueError("shape mismatch in solve")
        aug = Matrix([list(row) + [b[i]] for i, row in enumerate(self.rows)]).rref()
        nc = self.ncols
        x: list[Scalar] = [Fraction(0)] * nc
        seen = set()
        for row in aug.rows:
            lead = next((j for j, e in enumerate(row) if e), None)
            if lead is None:
                continue
            if lead == nc:
                raise ValueError("inconsistent linear system")
            x[lead] = row[nc]
            seen.add(lead)
        if len(seen) < self.rank():
            raise ValueError("underdetermined system")
        return x


def congruence_signature(m: Matrix) -> tuple[int, int, int]:
    """Sylvester signature (p, q, z) of a symmetric rational matrix.

    Diagonalizes by simultaneous row/column operations.  A hollow block
    (zero diagonal, nonzero off-diagonal entry at (i, j)) is filled by the
    symmetric completion row_i += row_j, col_i += col_j, which puts
    2*m[i][j] on the diagonal.
    """
    if not m.is_square():
        raise ValueError("signature of non-square matrix")
    w = m.symmetry_witness()
    if w is not None:
        raise ValueError(f"matrix not symmetric at index pair {w}")
    if any(isinstance(e, GaussianRational) and e.im != 0 for row in m.rows for e in row):
        raise ValueError("signature requires a real matrix")
    n = m.nrows
    a = [[Fraction(e.re if isinstance(e, GaussianRational) else e) for e in row]
         for row in m.rows]
    p = q = 0
    for k in range(n):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][i]), None)
            if swap is not None:
                a[k], a[swap] = a[swap], a[k]
                for row in a:
                    row[k], row[swap] = row[swap], row[k]
            else:
                pair = None
                for i in range(k, n):
                    for j in range(i + 1, n):
                        if a[i][j]:
                            pair = (i, j)
                            break
                    if pair:
                        break
                if pair is None:
                    break  # remaining block is zero
                i, j = pair
                for c in range(n):
                    a[i][c] += a[j][c]
                for r in range(n):
                    a[r][i] += a[r][j]
                if i != k:
                    a[k], a[i] = a[i], a[k]
                    for row in a:
                        row[k], row[i] = row[i], row[k]
        pivot = a[k][k]
        if not pivot:
            break
        if pivot > 0:
            p += 1
        else:
            q += 1
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] / pivot
                for c in range(n):
                    a[i][c] -= f * a[k][c]
                for r in range(n):
                    a[r][i] -= f * a[r][k]
    return p, q, n - p - q


def row_space_basis(vectors: Sequence[Sequence[Scalar]], dim: int) -> list[list[Scalar]]:
    """Echelonized basis of the span of the given coordinate vectors."""
    if not vectors:
        return []
    r = Matrix(vectors).rref()
    return [list(row) for row in r.rows if any(row)]


def in_span(basis: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> bool:
    if all(not e for e in v):
        return True
    if not basis:
        return False
    old = Matrix(basis).rank()
    new = Matrix(list(basis) + [list(v)]).rank()
    return new == old


def span_equal(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]], dim: int) -> bool:
    return row_space_basis(a, dim) == row_space_basis(b, dim)
