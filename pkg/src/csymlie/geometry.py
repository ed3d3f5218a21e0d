"""Checkers for complex structures, symplectic forms, and their pairings.

Conventions, fixed once for the whole package:

* a 2-form acts through its first slot, so ``omega . A`` (precomposition
  with an endomorphism A) has contraction matrix A^T M;
* the compatibility law for a complex symplectic pair reads
  omega1(Jx, y) = omega1(x, Jy), and the imaginary part is
  omega2 = -omega1 . J;
* checkers collect every violated law with its first witness in basis
  order rather than stopping at the first failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .forms import ExteriorForm
from .lie import (
    LieAlgebra,
    ce_differential,
    is_closed,
    subspace_is_abelian,
    subspace_is_ideal,
    subspace_is_subalgebra,
)
from .matrices import Matrix, congruence_signature, in_span, row_space_basis
from .report import Report
from .scalars import I, Scalar, to_gaussian


class StructureError(ValueError):
    """Raised when a constructor precondition fails; carries the report."""

    def __init__(self, message: str, report: Report | None = None):
        super().__init__(message)
        self.report = report


def compose_form(form: ExteriorForm, a: Matrix) -> ExteriorForm:
    """The 2-form (x, y) -> form(Ax, y);  contraction matrix A^T M."""
    m = a.transpose() @ form.as_matrix()
    return ExteriorForm.from_matrix(m)


def nijenhuis(g: LieAlgebra, j: Matrix) -> dict[tuple[int, int], list[Scalar]]:
    """N(x,y) = [Jx,Jy] - J[Jx,y] - J[x,Jy] - [x,y] on all basis pairs.

    Rejects maps with J^2 != -I before evaluating anything.
    """
    if (j @ j) != Matrix.identity(g.dim).scale(Fraction(-1)):
        raise StructureError("J squared is not minus the identity")
    table: dict[tuple[int, int], list[Scalar]] = {}
    for a in range(g.dim):
        ja = j.column(a)
        ea = g.basis_vector(a)
        for b in range(a + 1, g.dim):
            jb = j.column(b)
            eb = g.basis_vector(b)
            t1 = g.bracket(ja, jb)
            t2 = j.matvec(g.bracket(ja, eb))
            t3 = j.matvec(g.bracket(ea, jb))
            t4 = g.bracket(ea, eb)
            table[(a, b)] = [p - q - r - s for p, q, r, s in zip(t1, t2, t3, t4)]
    return table


def nijenhuis_witness(g: LieAlgebra, j: Matrix) -> tuple[int, int] | None:
    for (a, b), vec in sorted(nijenhuis(g, j).items()):
        if any(vec):
            return (a, b)
    return None


def compatibility_witness(j: Matrix, omega: ExteriorForm) -> tuple[int, int] | None:
    """First basis pair violating omega(Jx, y) = omega(x, Jy)."""
    m = omega.as_matrix()
    lhs = j.transpose() @ m
    rhs = m @ j
    for a in range(m.nrows):
        for b in range(m.ncols):
            if lhs.rows[a][b] != rhs.rows[a][b]:
                return (a, b)
    return None


@dataclass(frozen=True)
class ComplexSymplecticStructure:
    """Certified pair (J, omega1) with the derived imaginary part."""

    algebra: LieAlgebra
    j: Matrix
    omega1: ExteriorForm
    omega2: ExteriorForm

    def complex_form_matrix(self) -> Matrix:
        m1 = self.omega1.as_matrix().to_gaussian()
        m2 = self.omega2.as_matrix().to_gaussian()
        return m1 + m2.scale(I)


def derive_omega2(g: LieAlgebra, j: Matrix, omega1: ExteriorForm) -> ExteriorForm:
    """omega2 := -omega1 . J, after validating the preconditions."""
    w = compatibility_witness(j, omega1)
    if w is not None:
        raise StructureError(f"compatibility law fails on basis pair {w}")
    if not is_closed(g, omega1):
        raise StructureError("omega1 is not closed")
    omega2 = -compose_form(omega1, j)
    if not is_closed(g, omega2):
        raise StructureError("derived omega2 is not closed")
    if not omega2.as_matrix().det():
        raise StructureError("derived omega2 is degenerate")
    return omega2


def certify_complex_symplectic(g: LieAlgebra, j: Matrix,
                               omega1: ExteriorForm) -> tuple[Report, ComplexSymplecticStructure | None]:
    """Gatekeeper for complex symplectic pairs; reports every violated law."""
    report = Report()
    n = g.dim
    ok_j2 = report.add(
        "j-squared",
        (j @ j) == Matrix.identity(n).scale(Fraction(-1)),
        detail="J.J = -identity",
    )
    if ok_j2:
        report.add("nijenhuis", nijenhuis_witness(g, j) is None,
                   witness=nijenhuis_witness(g, j))
    omega1_ok = report.add("omega1-closed", is_closed(g, omega1))
    omega1_ok &= report.add("omega1-nondegenerate", bool(omega1.as_matrix().det()))
    cw = compatibility_witness(j, omega1)
    omega1_ok &= report.add(
        "omega1-j-compatibility", cw is None, witness=cw,
        detail="omega1(Jx,y) = omega1(x,Jy)",
    )
    if not report.ok():
        return report, None
    omega2 = -compose_form(omega1, j)
    report.add("omega2-closed", is_closed(g, omega2))
    report.add("omega2-nondegenerate", bool(omega2.as_matrix().det()))
    cw2 = compatibility_witness(j, omega2)
    report.add("omega2-j-compatibility", cw2 is None, witness=cw2)
    # type (2,0) over Q(i): the assembled complex form annihilates X + iJX
    mc = omega1.as_matrix().to_gaussian() + omega2.as_matrix().to_gaussian().scale(I)
    anti = Matrix.identity(n).to_gaussian() + j.to_gaussian().scale(I)
    report.add("type-20-annihilation", (anti.transpose() @ mc).is_zero())
    if not report.ok():
        return report, None
    return report, ComplexSymplecticStructure(g, j, omega1, omega2)


def check_lagrangian_splitting(g: LieAlgebra, j: Matrix, omega1: ExteriorForm,
                               sub: Sequence[Sequence[Scalar]],
                               ideal: Sequence[Sequence[Scalar]]) -> Report:
    """Verify a special Lagrangian splitting g = sub (+) ideal.

    Checks, in order: the two spans are complementary, ``ideal`` is an
    abelian ideal, ``sub`` a subalgebra, J swaps them (totally real), and
    both are isotropic for omega1 (Lagrangian by dimension count).  Also
    re-proves that J.ideal is a subalgebra.
    """
    report = Report()
    sub_b = row_space_basis(sub, g.dim)
    ideal_b = row_space_basis(ideal, g.dim)
    report.add(
        "splitting-complementary",
        len(sub_b) + len(ideal_b) == g.dim
        and Matrix(sub_b + ideal_b).rank() == g.dim,
        detail="sub (+) ideal = whole space",
    )
    v = subspace_is_ideal(g, ideal_b)
    report.add("ideal", v.ok, witness=v.witness, detail=v.detail)
    v = subspace_is_abelian(g, ideal_b)
    report.add("ideal-abelian", v.ok, witness=v.witness, detail=v.detail)
    v = subspace_is_subalgebra(g, sub_b)
    report.add("subalgebra", v.ok, witness=v.witness, detail=v.detail)

    j_sub = [j.matvec(x) for x in sub_b]
    j_ideal = [j.matvec(x) for x in ideal_b]
    report.add(
        "totally-real",
        all(in_span(ideal_b, x) for x in j_sub)
        and all(in_span(sub_b, x) for x in j_ideal),
        detail="J.sub = ideal and J.ideal = sub",
    )
    report.add(
        "jv-subalgebra",
        subspace_is_subalgebra(g, j_ideal).ok,
        detail="image of the ideal under J closes under brackets",
    )

    def isotropy_witness(basis):
        for a in range(len(basis)):
            for b in range(a + 1, len(basis)):
                if omega1(basis[a], basis[b]):
                    return (a, b)
        return None

    w = isotropy_witness(sub_b)
    report.add("isotropic-subalgebra", w is None, witness=w)
    w = isotropy_witness(ideal_b)
    report.add("isotropic-ideal", w is None, witness=w)
    return report


def is_product_structure(g: LieAlgebra, e: Matrix) -> Report:
    """E^2 = I with both eigenspaces subalgebras."""
    report = Report()
    n = g.dim
    report.add("e-squared", (e @ e) == Matrix.identity(n))
    plus = (e - Matrix.identity(n)).kernel_basis()
    minus = (e + Matrix.identity(n)).kernel_basis()
    report.add("eigenspace-split", len(plus) + len(minus) == n)
    report.add("plus-eigenspace-subalgebra", subspace_is_subalgebra(g, plus).ok)
    report.add("minus-eigenspace-subalgebra", subspace_is_subalgebra(g, minus).ok)
    return report


def neutral_metric_report(metric: Matrix) -> Report:
    report = Report()
    w = metric.symmetry_witness()
    report.add("metric-symmetric", w is None, witness=w)
    if w is None:
        p, q, z = congruence_signature(metric)
        half = metric.nrows // 2
        report.add(
            "metric-signature",
            (p, q, z) == (half, half, 0),
            witness=[p, q, z],
            detail=f"expected ({half},{half},0)",
        )
    return report


def type_annihilation_holds(g: LieAlgebra, j: Matrix, omega1: ExteriorForm,
                            omega2: ExteriorForm) -> bool:
    """(omega1 + i omega2)(X + iJX, .) = 0 for every basis X."""
    mc = omega1.as_matrix().to_gaussian() + omega2.as_matrix().to_gaussian().scale(I)
    anti = Matrix.identity(g.dim).to_gaussian() + j.to_gaussian().scale(I)
    return (anti.transpose() @ mc).is_zero()
