"""Dimension-doubling tower of special Lagrangian structures.

A built structure on h = g x| V carries a canonical connection on h itself:
the defining representation acts block-diagonally on base and fiber
coordinates, and vanishes in fiber directions.  That connection is
torsion-free, flat, parallel for J, E, the metric, and all three structure
forms, so h with any nondegenerate rational combination of the three forms
is again valid input for the special Lagrangian construction.  Iterating
doubles the dimension each step.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .forms import ExteriorForm
from .geometry import StructureError
from .lie import LieAlgebra, is_closed
from .matrices import Matrix
from .report import Report
from .scalars import Scalar
from .semidirect import (
    ConnectionData,
    SemidirectAlgebra,
    SpecialLagrangianStructure,
    build_special_lagrangian,
)


@dataclass(frozen=True)
class TowerConnection:
    """Connection matrices on h, one per basis element, zero in fiber directions."""

    structure: SpecialLagrangianStructure
    matrices: tuple[Matrix, ...]
    report: Report

    @property
    def algebra(self) -> LieAlgebra:
        return self.structure.algebra


def _parallel_witness(mats: Sequence[Matrix], m: Matrix) -> int | None:
    """First direction x with gamma(x)^T M + M gamma(x) != 0."""
    for a, mat in enumerate(mats):
        if not (mat.transpose() @ m + m @ mat).is_zero():
            return a
    return None


def build_tower_connection(sl: SpecialLagrangianStructure) -> TowerConnection:
    """Assemble the canonical connection on h and verify all its laws."""
    sd = sl.product
    h = sd.algebra
    n = sd.base_dim
    mats: list[Matrix] = []
    for a in range(h.dim):
        if a < n:
            gamma_a = sl.base.gamma[a]
            rows = []
            for i in range(n):
                rows.append(list(gamma_a.rows[i]) + [Fraction(0)] * n)
            for i in range(n):
                rows.append([Fraction(0)] * n + list(gamma_a.rows[i]))
            mats.append(Matrix(rows))
        else:
            mats.append(Matrix.zero(h.dim))

    report = Report()
    tw = None
    for a in range(h.dim):
        for b in range(a + 1, h.dim):
            lhs = [p - q for p, q in zip(mats[a].column(b), mats[b].column(a))]
            if lhs != h.bracket_basis(a, b):
                tw = (h.labels[a], h.labels[b])
                break
        if tw:
            break
    report.add("gamma-torsion-free", tw is None, witness=tw)

    fw = None
    for a in range(h.dim):
        for b in range(a + 1, h.dim):
            img = Matrix.zero(h.dim)
            for l, coeff in enumerate(h.bracket_basis(a, b)):
                if coeff:
                    img = img + mats[l].scale(coeff)
            if img != (mats[a] @ mats[b] - mats[b] @ mats[a]):
                fw = (h.labels[a], h.labels[b])
                break
        if fw:
            break
    report.add("gamma-flat", fw is None, witness=fw)

    jw = next((a for a in range(h.dim) if (mats[a] @ sl.j) != (sl.j @ mats[a])), None)
    report.add("gamma-j-parallel", jw is None,
               witness=None if jw is None else h.labels[jw])
    ew = next((a for a in range(h.dim)
               if (mats[a] @ sl.involution) != (sl.involution @ mats[a])), None)
    report.add("gamma-e-parallel", ew is None,
               witness=None if ew is None else h.labels[ew])

    for name, form in (("omega1", sl.omega1), ("omega2", sl.omega2), ("omega3", sl.omega3)):
        w = _parallel_witness(mats, form.as_matrix())
        report.add(f"gamma-{name}-parallel", w is None,
                   witness=None if w is None else h.labels[w])
    w = _parallel_witness(mats, sl.metric)
    report.add("gamma-metric-parallel", w is None,
               witness=None if w is None else h.labels[w])

    if not report.ok():
        raise StructureError("tower connection laws failed", report)
    return TowerConnection(sl, tuple(mats), report)


def hypersymplectic_report(sl: SpecialLagrangianStructure) -> Report:
    """The identity block tying the three forms, J, E, and the metric."""
    report = Report()
    h = sl.algebra
    n2 = h.dim
    j, e, g = sl.j, sl.involution, sl.metric
    m1, m2, m3 = (f.as_matrix() for f in (sl.omega1, sl.omega2, sl.omega3))

    report.add("j-squared", (j @ j) == Matrix.identity(n2).scale(Fraction(-1)))
    report.add("e-squared", (e @ e) == Matrix.identity(n2))
    report.add("je-anticommute", (j @ e) == -(e @ j))
    report.add("omega1-eq-omega2-compose-j", m1 == j.transpose() @ m2)
    report.add("omega3-eq-omega2-compose-e", m3 == e.transpose() @ m2)
    report.add("omega2-eq-neg-omega1-compose-j", m2 == -(j.transpose() @ m1))
    report.add("omega2-eq-omega3-compose-e", m3.transpose() @ e == -(m2.transpose()))
    report.add("metric-eq-omega2-compose-je", g == (j @ e).transpose() @ m2)
    report.add("omega1-eq-metric-compose-e", m1 == e.transpose() @ g)
    report.add("omega2-eq-metric-compose-je", m2 == (j @ e).transpose() @ g)
    report.add("omega3-eq-metric-compose-j", m3 == j.transpose() @ g)
    for name, form in (("omega1", sl.omega1), ("omega2", sl.omega2), ("omega3", sl.omega3)):
        report.add(f"{name}-closed", is_closed(h, form))
    sym = g.symmetry_witness()
    report.add("metric-symmetric", sym is None, witness=sym)
    if sym is None:
        from .matrices import congruence_signature

        p, q, z = congruence_signature(g)
        report.add("metric-signature", (p, q, z) == (n2 // 2, n2 // 2, 0),
                   witness=[p, q, z])
    return report


@dataclass(frozen=True)
class TowerCombo:
    coefficients: tuple[Fraction, Fraction, Fraction]
    structure: SpecialLagrangianStructure


@dataclass(frozen=True)
class TowerLevel:
    connection: TowerConnection
    extension: SemidirectAlgebra
    combos: tuple[TowerCombo, ...]
    report: Report

    @property
    def algebra(self) -> LieAlgebra:
        return self.extension.algebra

    def primary(self) -> SpecialLagrangianStructure:
        return self.combos[0].structure


UNIT_COMBOS = (
    (Fraction(1), Fraction(0), Fraction(0)),
    (Fraction(0), Fraction(1), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(1)),
)


def _fiber_prefix(labels: Sequence[str]) -> str:
    for prefix in ("v", "w", "u", "z"):
        if not any(l.startswith(prefix) for l in labels):
            return prefix
    return "x"


def combined_form(sl: SpecialLagrangianStructure,
                  coeffs: Sequence[Scalar]) -> ExteriorForm:
    a, b, c = coeffs
    return sl.omega1.scale(a) + sl.omega2.scale(b) + sl.omega3.scale(c)


def extend_tower(sl: SpecialLagrangianStructure,
                 combos: Sequence[Sequence[Scalar]] | None = None) -> TowerLevel:
    """One tower step: certified structures on the doubled algebra.

    Each requested combination a*omega1 + b*omega2 + c*omega3 is used as the
    polarization; degenerate combinations are rejected with the offending
    determinant.  The first combination is the default polarization for the
    next level.
    """
    conn = build_tower_connection(sl)
    h = sl.algebra
    if combos is None:
        combos = UNIT_COMBOS

    prefix = _fiber_prefix(h.labels)
    labels = list(h.labels) + [f"{prefix}{i + 1}" for i in range(h.dim)]

    report = Report()
    report.extend(conn.report)
    built: list[TowerCombo] = []
    extension: SemidirectAlgebra | None = None
    for coeffs in combos:
        a, b, c = (Fraction(x) for x in coeffs)
        omega = combined_form(sl, (a, b, c))
        det = omega.as_matrix().det()
        if not det:
            raise StructureError(
                f"combination ({a}, {b}, {c}) is degenerate: determinant {det}"
            )
        data = ConnectionData(h, omega, conn.matrices)
        structure = build_special_lagrangian(data, labels=labels)
        report.add(f"combo-({a},{b},{c})-certified", structure.report.ok())
        built.append(TowerCombo((a, b, c), structure))
        if extension is None:
            extension = structure.product
        elif extension.algebra != structure.product.algebra:
            raise StructureError("tower extension algebra differs between combos")
    assert extension is not None
    report.extend(hypersymplectic_report(sl), prefix="input-")
    return TowerLevel(conn, extension, tuple(built), report)


def iterate_tower(sl: SpecialLagrangianStructure, levels: int,
                  combos: Sequence[Sequence[Scalar]] | None = None) -> list[TowerLevel]:
    """Run ``levels`` tower steps, feeding each level's default polarization on."""
    out: list[TowerLevel] = []
    current = sl
    for _ in range(levels):
        level = extend_tower(current, combos)
        out.append(level)
        current = level.primary()
        combos = None  # only the first level honours a custom combination list
    return out
