"""Lie algebras by structure constants.

Brackets are stored only for index pairs j < k; lookups antisymmetrize, so
[x, x] = 0 holds structurally.  The exterior differential on the dual
follows the convention d(alpha)(x, y) = -alpha([x, y]) on 1-forms, extended
to higher degree as an antiderivation; d.d = 0 exactly when Jacobi holds.
Scalars may be rational or Gaussian rational throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .forms import ExteriorForm
from .matrices import Matrix, in_span, row_space_basis
from .scalars import Scalar


@dataclass(frozen=True)
class Verdict:
    """Outcome of a structural check, with the first witness on failure."""

    ok: bool
    witness: tuple | None = None
    detail: str | None = None

    def __bool__(self) -> bool:
        return self.ok


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q (or Q(i)) on a named basis."""

    __slots__ = ("dim", "labels", "brackets")

    def __init__(self, dim: int,
                 brackets: Mapping[tuple[int, int], Sequence[Scalar]],
                 labels: Sequence[str] | None = None):
        if labels is None:
            labels = [f"e{i + 1}" for i in range(dim)]
        if len(labels) != dim:
            raise ValueError("label count does not match dimension")
        table: dict[tuple[int, int], tuple[Scalar, ...]] = {}
        for (j, k), coeffs in brackets.items():
            if not (0 <= j < k < dim):
                raise ValueError(f"bracket key ({j}, {k}) must satisfy 0 <= j < k < dim")
            if len(coeffs) != dim:
                raise ValueError("bracket coefficient vector has wrong length")
            if any(coeffs):
                table[(j, k)] = tuple(coeffs)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "labels", tuple(labels))
        object.__setattr__(self, "brackets", table)

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.brackets == other.brackets

    def __hash__(self):
        return hash((self.dim, frozenset(self.brackets.items())))

    def __repr__(self):
        parts = []
        for (j, k), coeffs in sorted(self.brackets.items()):
            rhs = " + ".join(
                f"({c})*{self.labels[l]}" for l, c in enumerate(coeffs) if c
            )
            parts.append(f"[{self.labels[j]},{self.labels[k]}] = {rhs}")
        return f"LieAlgebra(dim={self.dim}: " + ("; ".join(parts) or "abelian") + ")"

    @staticmethod
    def abelian(dim: int, labels: Sequence[str] | None = None) -> "LieAlgebra":
        return LieAlgebra(dim, {}, labels)

    def relabel(self, labels: Sequence[str]) -> "LieAlgebra":
        return LieAlgebra(self.dim, dict(self.brackets), labels)

    # -- bracket evaluation -----------------------------------------------

    def bracket_basis(self, j: int, k: int) -> list[Scalar]:
        """[e_j, e_k] as a coordinate vector."""
        if j == k:
            return [Fraction(0)] * self.dim
        if j < k:
            coeffs = self.brackets.get((j, k))
            sign = 1
        else:
            coeffs = self.brackets.get((k, j))
            sign = -1
        if coeffs is None:
            return [Fraction(0)] * self.dim
        return [sign * c for c in coeffs]

    def bracket(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> list[Scalar]:
        """Bilinear extension of the structure constants."""
        out: list[Scalar] = [Fraction(0)] * self.dim
        for j, xj in enumerate(x):
            if not xj:
                continue
            for k, yk in enumerate(y):
                if not yk or j == k:
                    continue
                for l, c in enumerate(self.bracket_basis(j, k)):
                    if c:
                        out[l] = out[l] + xj * yk * c
        return out

    def adjoint(self, j: int) -> Matrix:
        """Matrix of ad_{e_j} (columns are [e_j, e_k])."""
        return Matrix.from_columns([self.bracket_basis(j, k) for k in range(self.dim)])

    def basis_vector(self, j: int) -> list[Scalar]:
        return [Fraction(1) if i == j else Fraction(0) for i in range(self.dim)]


def jacobiator(g: LieAlgebra, j: int, k: int, l: int) -> list[Scalar]:
    """[[e_j,e_k],e_l] + [[e_k,e_l],e_j] + [[e_l,e_j],e_k]."""
    el = g.basis_vector(l)
    ej = g.basis_vector(j)
    ek = g.basis_vector(k)
    a = g.bracket(g.bracket_basis(j, k), el)
    b = g.bracket(g.bracket_basis(k, l), ej)
    c = g.bracket(g.bracket_basis(l, j), ek)
    return [x + y + z for x, y, z in zip(a, b, c)]


def check_jacobi(g: LieAlgebra) -> Verdict:
    """Verify the Jacobi identity on all basis triples."""
    for j, k, l in combinations(range(g.dim), 3):
        vec = jacobiator(g, j, k, l)
        if any(vec):
            return Verdict(
                False,
                witness=(j, k, l),
                detail="jacobiator {} on ({},{},{})".format(
                    [str(c) for c in vec], g.labels[j], g.labels[k], g.labels[l]
                ),
            )
    return Verdict(True)


def ce_differential(g: LieAlgebra, form: ExteriorForm) -> ExteriorForm:
    """Exterior differential on invariant forms, as an antiderivation."""
    if form.dim != g.dim:
        raise ValueError("form indexed against a different dimension")
    if form.degree == 0:
        return ExteriorForm.zero(g.dim, 1)
    d_cov = _covector_differentials(g)
    out = ExteriorForm.zero(g.dim, form.degree + 1)
    for idx, c in form.terms.items():
        for pos, i in enumerate(idx):
            if d_cov[i].is_zero():
                continue
            sign = 1 if pos % 2 == 0 else -1
            prefix = ExteriorForm.monomial(g.dim, idx[:pos], Fraction(sign) * c)
            suffix = ExteriorForm.monomial(g.dim, idx[pos + 1:])
            out = out + prefix.wedge(d_cov[i]).wedge(suffix)
    return out


def _covector_differentials(g: LieAlgebra) -> list[ExteriorForm]:
    """d(e^m) = -sum_{j<k} c_{jk}^m e^j ^ e^k for each basis covector."""
    diffs = [dict() for _ in range(g.dim)]
    for (j, k), coeffs in g.brackets.items():
        for m, c in enumerate(coeffs):
            if c:
                diffs[m][(j, k)] = -c
    return [ExteriorForm(g.dim, 2, d) for d in diffs]


def is_closed(g: LieAlgebra, form: ExteriorForm) -> bool:
    return ce_differential(g, form).is_zero()


def center(g: LieAlgebra) -> list[list[Scalar]]:
    """Echelonized basis of the center (kernel of the adjoint action)."""
    rows = []
    for k in range(g.dim):
        for l in range(g.dim):
            rows.append([g.bracket_basis(m, k)[l] for m in range(g.dim)])
    return Matrix(rows).kernel_basis()


def _bracket_span(g: LieAlgebra, a: Sequence[Sequence[Scalar]],
                  b: Sequence[Sequence[Scalar]]) -> list[list[Scalar]]:
    products = [g.bracket(x, y) for x in a for y in b]
    products = [p for p in products if any(p)]
    return row_space_basis(products, g.dim)


def lower_central_series(g: LieAlgebra) -> list[int]:
    """Dimensions of g >= [g,g] >= [g,[g,g]] >= ... until stable or zero."""
    full = [g.basis_vector(j) for j in range(g.dim)]
    dims = [g.dim]
    current = full
    while True:
        nxt = _bracket_span(g, full, current)
        dims.append(len(nxt))
        if len(nxt) == 0 or len(nxt) == len(current):
            return dims
        current = nxt


def nilpotency_step(g: LieAlgebra) -> int | None:
    """Nilpotency class, or None when the series stabilizes above zero."""
    dims = lower_central_series(g)
    if dims[-1] != 0:
        return None
    return dims.index(0)


def check_homomorphism(phi: Matrix, g: LieAlgebra, h: LieAlgebra,
                       require_isomorphism: bool = False) -> Verdict:
    """Check phi([x,y]_g) = [phi x, phi y]_h on all basis pairs."""
    if phi.ncols != g.dim or phi.nrows != h.dim:
        raise ValueError("matrix shape does not match source/target dimensions")
    for j in range(g.dim):
        for k in range(j + 1, g.dim):
            lhs = phi.matvec(g.bracket_basis(j, k))
            rhs = h.bracket(phi.column(j), phi.column(k))
            if lhs != rhs:
                return Verdict(
                    False,
                    witness=(j, k),
                    detail=f"bracket image mismatch on ({g.labels[j]},{g.labels[k]})",
                )
    if require_isomorphism:
        if g.dim != h.dim or not phi.det():
            return Verdict(False, witness=None, detail="map is not invertible")
    return Verdict(True)


def subspace_is_subalgebra(g: LieAlgebra, vectors: Sequence[Sequence[Scalar]]) -> Verdict:
    basis = row_space_basis(vectors, g.dim)
    for a in basis:
        for b in basis:
            p = g.bracket(a, b)
            if any(p) and not in_span(basis, p):
                return Verdict(False, witness=None, detail="bracket leaves the subspace")
    return Verdict(True)


def subspace_is_ideal(g: LieAlgebra, vectors: Sequence[Sequence[Scalar]]) -> Verdict:
    basis = row_space_basis(vectors, g.dim)
    for j in range(g.dim):
        ej = g.basis_vector(j)
        for b in basis:
            p = g.bracket(ej, b)
            if any(p) and not in_span(basis, p):
                return Verdict(
                    False, witness=(j,),
                    detail=f"[{g.labels[j]}, ideal] leaves the subspace",
                )
    return Verdict(True)


def subspace_is_abelian(g: LieAlgebra, vectors: Sequence[Sequence[Scalar]]) -> Verdict:
    basis = row_space_basis(vectors, g.dim)
    for i, a in enumerate(basis):
        for b in basis[i + 1:]:
            if any(g.bracket(a, b)):
                return Verdict(False, witness=None, detail="nonzero bracket inside subspace")
    return Verdict(True)
