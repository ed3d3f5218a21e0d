"""Sparse exterior forms on a fixed finite-dimensional space.

A form of degree d stores a map from strictly increasing d-tuples of
0-based covector indices to nonzero scalars.  Degree-2 forms convert to and
from their contraction matrix M[i][j] = form(e_i, e_j) (contraction always
in the first slot).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .matrices import Matrix
from .scalars import Scalar, to_gaussian


def _merge_sign(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Sort the concatenation of two increasing tuples, tracking parity.

    Returns (sorted tuple, sign); sign 0 when an index repeats.
    """
    merged = list(a + b)
    sign = 1
    # insertion sort; counts transpositions exactly
    for i in range(1, len(merged)):
        j = i
        while j > 0 and merged[j - 1] > merged[j]:
            merged[j - 1], merged[j] = merged[j], merged[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and merged[j - 1] == merged[j]:
            return tuple(merged), 0
    return tuple(merged), sign


class ExteriorForm:
    """Alternating multilinear form with exact sparse coefficients."""

    __slots__ = ("dim", "degree", "terms")

    def __init__(self, dim: int, degree: int,
                 terms: Mapping[tuple[int, ...], Scalar] | None = None):
        clean: dict[tuple[int, ...], Scalar] = {}
        for idx, c in (terms or {}).items():
            t = tuple(idx)
            if len(t) != degree:
                raise ValueError(f"index tuple {t} has wrong length for degree {degree}")
            if any(not (0 <= i < dim) for i in t):
                raise ValueError(f"index tuple {t} out of range for dimension {dim}")
            if any(t[i] >= t[i + 1] for i in range(len(t) - 1)):
                raise ValueError(f"index tuple {t} is not strictly increasing")
            if c:
                clean[t] = c
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ExteriorForm is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(dim: int, degree: int) -> "ExteriorForm":
        return ExteriorForm(dim, degree, {})

    @staticmethod
    def covector(dim: int, index: int, coeff: Scalar = Fraction(1)) -> "ExteriorForm":
        return ExteriorForm(dim, 1, {(index,): coeff})

    @staticmethod
    def monomial(dim: int, indices: Sequence[int], coeff: Scalar = Fraction(1)) -> "ExteriorForm":
        """Wedge monomial for possibly unsorted indices, with the sorting sign."""
        idx = tuple(indices)
        sorted_idx, sign = _merge_sign(idx, ())
        if sign == 0:
            return ExteriorForm.zero(dim, len(idx))
        return ExteriorForm(dim, len(idx), {sorted_idx: sign * coeff})

    @staticmethod
    def from_matrix(m: Matrix) -> "ExteriorForm":
        """Degree-2 form from an antisymmetric contraction matrix."""
        if not m.is_antisymmetric():
            raise ValueError("matrix of a 2-form must be antisymmetric")
        terms = {}
        for i in range(m.nrows):
            for j in range(i + 1, m.ncols):
                if m.rows[i][j]:
                    terms[(i, j)] = m.rows[i][j]
        return ExteriorForm(m.nrows, 2, terms)

    # -- structure ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, ExteriorForm):
            return NotImplemented
        return (self.dim, self.degree) == (other.dim, other.degree) and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, self.degree, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"ExteriorForm({self.dim}, deg={self.degree}, 0)"
        body = " + ".join(
            f"({c})*e^{{{','.join(str(i + 1) for i in idx)}}}"
            for idx, c in sorted(self.terms.items())
        )
        return f"ExteriorForm({body})"

    # -- linear operations ----------------------------------------------

    def __add__(self, other: "ExteriorForm") -> "ExteriorForm":
        self._need_compatible(other)
        terms = dict(self.terms)
        for idx, c in other.terms.items():
            s = terms.get(idx, Fraction(0)) + c
            if s:
                terms[idx] = s
            else:
                terms.pop(idx, None)
        return ExteriorForm(self.dim, self.degree, terms)

    def __sub__(self, other: "ExteriorForm") -> "ExteriorForm":
        return self + (-other)

    def __neg__(self) -> "ExteriorForm":
        return ExteriorForm(self.dim, self.degree, {i: -c for i, c in self.terms.items()})

    def scale(self, c: Scalar) -> "ExteriorForm":
        if not c:
            return ExteriorForm.zero(self.dim, self.degree)
        return ExteriorForm(self.dim, self.degree, {i: c * x for i, x in self.terms.items()})

    def to_gaussian(self) -> "ExteriorForm":
        return ExteriorForm(
            self.dim, self.degree, {i: to_gaussian(c) for i, c in self.terms.items()}
        )

    def _need_compatible(self, other: "ExteriorForm") -> None:
        if self.dim != other.dim:
            raise ValueError("forms live on spaces of different dimension")
        if self.degree != other.degree:
            raise ValueError("degree mismatch")

    # -- multiplicative structure ----------------------------------------

    def wedge(self, other: "ExteriorForm") -> "ExteriorForm":
        if self.dim != other.dim:
            raise ValueError("forms live on spaces of different dimension")
        terms: dict[tuple[int, ...], Scalar] = {}
        for ia, ca in self.terms.items():
            for ib, cb in other.terms.items():
                idx, sign = _merge_sign(ia, ib)
                if sign == 0:
                    continue
                c = sign * ca * cb
                s = terms.get(idx, Fraction(0)) + c
                if s:
                    terms[idx] = s
                else:
                    terms.pop(idx, None)
        return ExteriorForm(self.dim, self.degree + other.degree, terms)

    def __call__(self, *vectors: Sequence[Scalar]) -> Scalar:
        """Evaluate on coordinate vectors (full alternating expansion)."""
        if len(vectors) != self.degree:
            raise ValueError("wrong number of arguments")
        total: Scalar = Fraction(0)
        for idx, c in self.terms.items():
            # determinant of the degree x degree minor picked by idx
            minor = Matrix([[v[i] for i in idx] for v in vectors])
            total = total + c * minor.det()
        return total

    def contract(self, v: Sequence[Scalar]) -> "ExteriorForm":
        """Interior product in the first slot."""
        if self.degree == 0:
            raise ValueError("cannot contract a 0-form")
        terms: dict[tuple[int, ...], Scalar] = {}
        for idx, c in self.terms.items():
            for pos, i in enumerate(idx):
                if not v[i]:
                    continue
                rest = idx[:pos] + idx[pos + 1:]
                coeff = c * v[i] * (1 if pos % 2 == 0 else -1)
                s = terms.get(rest, Fraction(0)) + coeff
                if s:
                    terms[rest] = s
                else:
                    terms.pop(rest, None)
        return ExteriorForm(self.dim, self.degree - 1, terms)

    def pullback(self, a: Matrix) -> "ExteriorForm":
        """Precompose with the linear map given by ``a`` (columns = images)."""
        if a.nrows != self.dim:
            raise ValueError("pullback map has wrong target dimension")
        dim = a.ncols
        result = ExteriorForm.zero(dim, self.degree)
        cols = [a.column(j) for j in range(dim)]
        for idx in combinations(range(dim), self.degree):
            val = self(*[cols[j] for j in idx])
            if val:
                result = result + ExteriorForm(dim, self.degree, {idx: val})
        return result

    def as_matrix(self) -> Matrix:
        """Contraction matrix of a 2-form: M[i][j] = form(e_i, e_j)."""
        if self.degree != 2:
            raise ValueError("as_matrix applies to 2-forms")
        rows = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for (i, j), c in self.terms.items():
            rows[i][j] = c
            rows[j][i] = -c
        return Matrix(rows)

    def coefficient(self, indices: Sequence[int]) -> Scalar:
        idx, sign = _merge_sign(tuple(indices), ())
        if sign == 0:
            return Fraction(0)
        return sign * self.terms.get(idx, Fraction(0))


def standard_symplectic_pairs(n: int, pairing: str = "adjacent") -> ExteriorForm:
    """Sum of coordinate-pair covector wedges on a 2n-dimensional space.

    ``adjacent`` pairs (1,2), (3,4), ...; ``split`` pairs (i, i+n).
    Both conventions occur in the catalog; entries always store their form
    explicitly.
    """
    terms: dict[tuple[int, ...], Scalar] = {}
    if pairing == "adjacent":
        for j in range(n):
            terms[(2 * j, 2 * j + 1)] = Fraction(1)
    elif pairing == "split":
        for j in range(n):
            terms[(j, j + n)] = Fraction(1)
    else:
        raise ValueError("pairing must be 'adjacent' or 'split'")
    return ExteriorForm(2 * n, 2, terms)
