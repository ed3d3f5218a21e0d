"""Semidirect products, flat symplectic connections, and the mirror check.

The central construction: given a Lie algebra g with symplectic form omega
and a linear map gamma: g -> End(V) on a copy V of g's underlying space
satisfying

* torsion-free:  gamma(x)y - gamma(y)x = [x, y]
* symplectic:    omega(gamma(x)y, z) + omega(y, gamma(x)z) = 0
* flat:          gamma([x,y]) = gamma(x)gamma(y) - gamma(y)gamma(x)

the semidirect product h = g x| V carries a complex symplectic structure for
which g and V are totally real and Lagrangian:

    J(x, u)       = (-u, x)
    omega1((x,u),(y,v)) = -omega(x, v) - omega(u, y)
    omega2((x,u),(y,v)) =  omega(x, y) - omega(u, v)
    omega3((x,u),(y,v)) =  omega(x, y) + omega(u, v)
    E = +1 on g, -1 on V
    metric = omega2(JE ., .)

The mirror dual lives on g x| V* via the dual representation.  The pairing
isomorphism h -> dual sends (x, u) to (x, contraction of u with the
restriction of omega2 to V); with that convention the two mirror identities
come out as exact matrix equalities omega_hat = -omega_tilde and
j_hat = j_tilde.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .forms import ExteriorForm
from .geometry import (
    ComplexSymplecticStructure,
    StructureError,
    certify_complex_symplectic,
    check_lagrangian_splitting,
    compose_form,
    neutral_metric_report,
    nijenhuis_witness,
)
from .lie import LieAlgebra, Verdict, check_homomorphism, check_jacobi, is_closed
from .matrices import Matrix
from .report import Report
from .scalars import Scalar


@dataclass(frozen=True)
class Representation:
    """Linear action of ``algebra`` on a vector space of dimension ``space_dim``."""

    algebra: LieAlgebra
    space_dim: int
    matrices: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.matrices) != self.algebra.dim:
            raise ValueError("one matrix per basis element required")
        for m in self.matrices:
            if m.nrows != self.space_dim or m.ncols != self.space_dim:
                raise ValueError("representation matrix has wrong shape")

    def act(self, x: Sequence[Scalar]) -> Matrix:
        """Matrix of the action of the algebra element with coordinates x."""
        out = Matrix.zero(self.space_dim)
        for j, c in enumerate(x):
            if c:
                out = out + self.matrices[j].scale(c)
        return out

    def law_witness(self) -> tuple[int, int] | None:
        """First basis pair violating gamma([x,y]) = [gamma(x), gamma(y)]."""
        g = self.algebra
        for j in range(g.dim):
            for k in range(j + 1, g.dim):
                lhs = self.act(g.bracket_basis(j, k))
                a, b = self.matrices[j], self.matrices[k]
                if lhs != (a @ b - b @ a):
                    return (j, k)
        return None


def dual_representation(rep: Representation) -> Representation:
    """Action on the dual space: matrices are negated transposes."""
    return Representation(
        rep.algebra,
        rep.space_dim,
        tuple(-m.transpose() for m in rep.matrices),
    )


@dataclass(frozen=True)
class SemidirectAlgebra:
    """A Lie algebra together with its defining splitting g (+) V."""

    algebra: LieAlgebra
    base_dim: int
    fiber_dim: int
    rep: Representation

    @property
    def dim(self) -> int:
        return self.base_dim + self.fiber_dim

    def base_indices(self) -> range:
        return range(self.base_dim)

    def fiber_indices(self) -> range:
        return range(self.base_dim, self.dim)

    def base_vectors(self) -> list[list[Scalar]]:
        return [self.algebra.basis_vector(j) for j in self.base_indices()]

    def fiber_vectors(self) -> list[list[Scalar]]:
        return [self.algebra.basis_vector(j) for j in self.fiber_indices()]


def semidirect_product(rep: Representation,
                       labels: Sequence[str] | None = None,
                       fiber_prefix: str = "v") -> SemidirectAlgebra:
    """Build g x| V with brackets [(x,u),(y,v)] = ([x,y], g(x)v - g(y)u)."""
    w = rep.law_witness()
    if w is not None:
        g = rep.algebra
        raise StructureError(
            f"representation law fails on basis pair ({g.labels[w[0]]}, {g.labels[w[1]]})"
        )
    g = rep.algebra
    n, m = g.dim, rep.space_dim
    dim = n + m
    if labels is None:
        labels = list(g.labels) + [f"{fiber_prefix}{i + 1}" for i in range(m)]
    brackets: dict[tuple[int, int], list[Scalar]] = {}
    for j in range(n):
        for k in range(j + 1, n):
            coeffs = g.bracket_basis(j, k)
            if any(coeffs):
                brackets[(j, k)] = list(coeffs) + [Fraction(0)] * m
    for j in range(n):
        mat = rep.matrices[j]
        for k in range(m):
            col = mat.column(k)
            if any(col):
                brackets[(j, n + k)] = [Fraction(0)] * n + list(col)
    h = LieAlgebra(dim, brackets, labels)
    jac = check_jacobi(h)
    if not jac.ok:
        raise StructureError(f"semidirect product violates Jacobi: {jac.detail}")
    return SemidirectAlgebra(h, n, m, rep)


@dataclass(frozen=True)
class ConnectionData:
    """A symplectic Lie algebra with a candidate torsion-free flat connection.

    ``gamma`` acts on the underlying vector space of the algebra itself
    (dual bases are index-aligned throughout).
    """

    algebra: LieAlgebra
    omega: ExteriorForm
    gamma: tuple[Matrix, ...]

    def __post_init__(self):
        if self.omega.dim != self.algebra.dim or self.omega.degree != 2:
            raise ValueError("omega must be a 2-form on the algebra")
        if len(self.gamma) != self.algebra.dim:
            raise ValueError("one connection matrix per basis element required")

    def representation(self) -> Representation:
        return Representation(self.algebra, self.algebra.dim, self.gamma)

    def gamma_act(self, x: Sequence[Scalar]) -> Matrix:
        return self.representation().act(x)


def connection_laws_report(c: ConnectionData) -> Report:
    """Torsion-free, symplectic, and flat, with witnesses."""
    report = Report()
    g = c.algebra
    n = g.dim

    report.add("omega-closed", is_closed(g, c.omega))
    report.add("omega-nondegenerate", bool(c.omega.as_matrix().det()))

    tw = None
    for j in range(n):
        for k in range(j + 1, n):
            lhs = [a - b for a, b in zip(c.gamma[j].column(k), c.gamma[k].column(j))]
            if lhs != g.bracket_basis(j, k):
                tw = (g.labels[j], g.labels[k])
                break
        if tw:
            break
    report.add("torsion-free", tw is None, witness=tw,
               detail="gamma(x)y - gamma(y)x = [x,y]")

    sw = None
    m = c.omega.as_matrix()
    for j in range(n):
        a = c.gamma[j]
        # omega(gamma(x)y, z) + omega(y, gamma(x)z) = 0  <=>  A^T M + M A = 0
        if not (a.transpose() @ m + m @ a).is_zero():
            sw = (g.labels[j],)
            break
    report.add("symplectic", sw is None, witness=sw,
               detail="omega(gamma(x)y, z) + omega(y, gamma(x)z) = 0")

    fw = c.representation().law_witness()
    report.add("flat", fw is None,
               witness=None if fw is None else (g.labels[fw[0]], g.labels[fw[1]]),
               detail="gamma([x,y]) = [gamma(x), gamma(y)]")
    return report


@dataclass(frozen=True)
class SpecialLagrangianStructure:
    """Everything built from one valid ConnectionData."""

    base: ConnectionData
    product: SemidirectAlgebra
    j: Matrix
    omega1: ExteriorForm
    omega2: ExteriorForm
    omega3: ExteriorForm
    involution: Matrix
    metric: Matrix
    certified: ComplexSymplecticStructure
    report: Report

    @property
    def algebra(self) -> LieAlgebra:
        return self.product.algebra


def _block_j(n: int) -> Matrix:
    """J(x, u) = (-u, x) in block form."""
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * n + [Fraction(-1) if k == i else Fraction(0) for k in range(n)])
    for i in range(n):
        rows.append([Fraction(1) if k == i else Fraction(0) for k in range(n)] + [Fraction(0)] * n)
    return Matrix(rows)


def _block_involution(n: int) -> Matrix:
    rows = []
    for i in range(2 * n):
        rows.append(
            [Fraction(1 if (i == k and i < n) else (-1 if (i == k) else 0))
             for k in range(2 * n)]
        )
    return Matrix(rows)


def _paired_form(omega: ExteriorForm, sign_base: int, sign_fiber: int,
                 mixed: bool) -> ExteriorForm:
    """Assemble the three structure forms on g (+) V from omega on g.

    mixed=True builds (x,u),(y,v) -> sign_base*omega(x,v) + sign_fiber*omega(u,y);
    mixed=False builds sign_base*omega(x,y) + sign_fiber*omega(u,v).
    """
    n = omega.dim
    m = omega.as_matrix()
    rows = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for a in range(n):
        for b in range(n):
            if mixed:
                rows[a][n + b] = sign_base * m.rows[a][b]
                rows[n + a][b] = sign_fiber * m.rows[a][b]
            else:
                rows[a][b] = sign_base * m.rows[a][b]
                rows[n + a][n + b] = sign_fiber * m.rows[a][b]
    return ExteriorForm.from_matrix(Matrix(rows))


def build_special_lagrangian(c: ConnectionData,
                             labels: Sequence[str] | None = None) -> SpecialLagrangianStructure:
    """Construct and certify the complex symplectic structure on g x| V."""
    laws = connection_laws_report(c)
    if not laws.ok():
        failed = ", ".join(ch.id for ch in laws.failures())
        raise StructureError(f"connection laws violated: {failed}", laws)

    sd = semidirect_product(c.representation(), labels=labels)
    n = c.algebra.dim
    h = sd.algebra

    j = _block_j(n)
    omega1 = _paired_form(c.omega, -1, -1, mixed=True)
    omega2 = _paired_form(c.omega, 1, -1, mixed=False)
    omega3 = _paired_form(c.omega, 1, 1, mixed=False)
    e = _block_involution(n)
    # metric = omega2(JE ., .)
    metric = (j @ e).transpose() @ omega2.as_matrix()

    report = Report()
    report.extend(laws, prefix="connection-")
    cert_report, certified = certify_complex_symplectic(h, j, omega1)
    report.extend(cert_report)
    if certified is None:
        raise StructureError("complex symplectic certification failed", report)
    if certified.omega2 != omega2:
        raise StructureError("derived omega2 disagrees with the paired template", report)

    split = check_lagrangian_splitting(h, j, omega1, sd.base_vectors(), sd.fiber_vectors())
    report.extend(split, prefix="splitting-")
    report.add("omega3-closed", is_closed(h, omega3))
    report.add("omega3-nondegenerate", bool(omega3.as_matrix().det()))
    report.add("e-squared", (e @ e) == Matrix.identity(2 * n))
    report.add("je-anticommute", (j @ e) == -(e @ j))
    report.extend(neutral_metric_report(metric))
    if not report.ok():
        raise StructureError("structure verification failed", report)

    return SpecialLagrangianStructure(
        base=c, product=sd, j=j, omega1=omega1, omega2=omega2, omega3=omega3,
        involution=e, metric=metric, certified=certified, report=report,
    )


# -- mirror constructions ---------------------------------------------------


def dual_semidirect(sd: SemidirectAlgebra) -> SemidirectAlgebra:
    """g x| V* with the dual representation; fiber labels get a star."""
    dual = dual_representation(sd.rep)
    base_labels = [sd.algebra.labels[i] for i in sd.base_indices()]
    fiber_labels = [sd.algebra.labels[i] + "*" for i in sd.fiber_indices()]
    return semidirect_product(dual, labels=base_labels + fiber_labels)


def mirror_symplectic(sd: SemidirectAlgebra, j: Matrix) -> tuple[SemidirectAlgebra, ExteriorForm]:
    """Symplectic form on the dual semidirect product induced by J.

    omega_hat((x, mu), (y, nu)) = nu(Jx) - mu(Jy); requires the splitting to
    be totally real for J.
    """
    n, m = sd.base_dim, sd.fiber_dim
    for a in range(n):
        col = j.column(a)
        if any(col[:n]):
            raise StructureError("splitting is not totally real: J(base) leaves the fiber")
    for a in range(n, n + m):
        col = j.column(a)
        if any(col[n:]):
            raise StructureError("splitting is not totally real: J(fiber) leaves the base")
    hat = dual_semidirect(sd)
    rows = [[Fraction(0)] * (n + m) for _ in range(n + m)]
    for a in range(n):
        jx = j.column(a)[n:]  # fiber coordinates of J e_a
        for b in range(m):
            rows[a][n + b] = jx[b]
            rows[n + b][a] = -jx[b]
    omega_hat = ExteriorForm.from_matrix(Matrix(rows))
    if not is_closed(hat.algebra, omega_hat):
        raise StructureError("mirror symplectic form is not closed")
    if not omega_hat.as_matrix().det():
        raise StructureError("mirror symplectic form is degenerate")
    return hat, omega_hat


def mirror_complex(sd: SemidirectAlgebra, omega: ExteriorForm) -> tuple[SemidirectAlgebra, Matrix]:
    """Complex structure on the dual semidirect product induced by omega.

    j_hat(x, mu) = (-omega^{-1}(mu), omega(x)); requires the splitting to be
    Lagrangian for omega.
    """
    n, m = sd.base_dim, sd.fiber_dim
    mat = omega.as_matrix()
    if not mat.det():
        raise StructureError("omega is degenerate")
    for a in range(n):
        for b in range(n):
            if mat.rows[a][b]:
                raise StructureError("splitting is not Lagrangian: omega on base x base")
    for a in range(n, n + m):
        for b in range(n, n + m):
            if mat.rows[a][b]:
                raise StructureError("splitting is not Lagrangian: omega on fiber x fiber")
    hat = dual_semidirect(sd)
    # B[a][k] = omega(e_a, u_k);  omega: base -> V*, coordinates mu = B^T x
    b = Matrix([[mat.rows[a][n + k] for k in range(m)] for a in range(n)])
    c = b.transpose()
    c_inv = c.inverse()
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * n + [-c_inv.rows[i][k] for k in range(m)])
    for i in range(m):
        rows.append([c.rows[i][k] for k in range(n)] + [Fraction(0)] * m)
    j_hat = Matrix(rows)
    if (j_hat @ j_hat) != Matrix.identity(n + m).scale(Fraction(-1)):
        raise StructureError("mirror complex structure does not square to -identity")
    w = nijenhuis_witness(hat.algebra, j_hat)
    if w is not None:
        raise StructureError(f"mirror complex structure is not integrable at {w}")
    return hat, j_hat


def pairing_isomorphism(sl: SpecialLagrangianStructure) -> Matrix:
    """The Lie isomorphism h -> dual, (x, u) -> (x, omega2|_V contracted with u)."""
    n = sl.product.base_dim
    omega2_fiber = Matrix(
        [[sl.omega2.as_matrix().rows[n + a][n + b] for b in range(n)] for a in range(n)]
    )
    rows = []
    for i in range(n):
        rows.append([Fraction(1 if k == i else 0) for k in range(n)] + [Fraction(0)] * n)
    for i in range(n):
        # fiber block: u_k maps to the covector omega2(u_k, .) restricted to V
        rows.append([Fraction(0)] * n + [omega2_fiber.rows[k][i] for k in range(n)])
    return Matrix(rows)


@dataclass(frozen=True)
class MirrorArtifacts:
    structure: SpecialLagrangianStructure
    dual: SemidirectAlgebra
    pairing: Matrix
    omega_hat: ExteriorForm
    j_hat: Matrix
    omega_tilde: ExteriorForm
    j_tilde: Matrix
    report: Report


def verify_self_mirror(c: ConnectionData,
                       labels: Sequence[str] | None = None) -> MirrorArtifacts:
    """Run the whole mirror pipeline and check the two exact identities.

    Builds h and its dual, certifies the pairing map as a Lie isomorphism,
    transports (J, omega1) along it, and compares with the structures the
    two mirror constructions produce directly: omega_hat = -omega_tilde and
    j_hat = j_tilde, entrywise.
    """
    sl = build_special_lagrangian(c, labels=labels)
    report = Report()
    report.extend(sl.report)

    hat, omega_hat = mirror_symplectic(sl.product, sl.j)
    hat2, j_hat = mirror_complex(sl.product, sl.omega1)
    if hat.algebra != hat2.algebra:
        raise StructureError("mirror constructions disagree on the dual algebra")

    pairing = pairing_isomorphism(sl)
    hom = check_homomorphism(pairing, sl.algebra, hat.algebra, require_isomorphism=True)
    report.add("pairing-homomorphism", hom.ok, witness=hom.witness, detail=hom.detail)
    det = pairing.det()
    report.add("pairing-invertible", bool(det))

    p_inv = pairing.inverse()
    j_tilde = pairing @ sl.j @ p_inv
    omega_tilde = sl.omega1.pullback(p_inv)

    report.add("omega-hat-closed", is_closed(hat.algebra, omega_hat))
    report.add("j-hat-integrable", nijenhuis_witness(hat.algebra, j_hat) is None)
    report.add(
        "mirror-symplectic-identity",
        omega_hat == -omega_tilde,
        detail="omega_hat = -omega_tilde entrywise",
    )
    report.add(
        "mirror-complex-identity",
        j_hat == j_tilde,
        detail="j_hat = j_tilde entrywise",
    )
    return MirrorArtifacts(
        structure=sl, dual=hat, pairing=pairing, omega_hat=omega_hat,
        j_hat=j_hat, omega_tilde=omega_tilde, j_tilde=j_tilde, report=report,
    )
