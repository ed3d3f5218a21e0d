from fractions import Fraction

import pytest

from csymlie.forms import ExteriorForm
from csymlie.geometry import (
    StructureError,
    certify_complex_symplectic,
    check_lagrangian_splitting,
    compose_form,
    derive_omega2,
    is_product_structure,
    neutral_metric_report,
    nijenhuis,
    nijenhuis_witness,
)
from csymlie.lie import LieAlgebra
from csymlie.matrices import Matrix

F = Fraction


def kt4():
    return LieAlgebra(4, {(0, 2): [0, 0, 0, F(1)]}, ["f1", "f2", "f3", "f4"])


def standard_j():
    return Matrix(
        [
            [F(0), F(0), F(-1), F(0)],
            [F(0), F(0), F(0), F(-1)],
            [F(1), F(0), F(0), F(0)],
            [F(0), F(1), F(0), F(0)],
        ]
    )


def omega1_template():
    return ExteriorForm(4, 2, {(0, 3): F(-1), (1, 2): F(1)})


def test_nijenhuis_vanishes_on_abelian():
    g = LieAlgebra.abelian(4)
    table = nijenhuis(g, standard_j())
    assert all(not any(v) for v in table.values())


def test_nijenhuis_vanishes_on_kt4():
    assert nijenhuis_witness(kt4(), standard_j()) is None


def test_nijenhuis_nonzero_witness():
    # [f1,f2] = f3 with the standard J: N(f1,f2) = -f3
    g = LieAlgebra(4, {(0, 1): [0, 0, F(1), 0]})
    table = nijenhuis(g, standard_j())
    assert table[(0, 1)] == [F(0), F(0), F(-1), F(0)]
    assert nijenhuis_witness(g, standard_j()) == (0, 1)


def test_nijenhuis_rejects_non_complex_structure():
    with pytest.raises(StructureError):
        nijenhuis(kt4(), Matrix.identity(4))


def test_derive_omega2_kt4():
    omega2 = derive_omega2(kt4(), standard_j(), omega1_template())
    assert omega2.terms == {(0, 1): F(1), (2, 3): F(-1)}


def test_derive_omega2_abelian_same_template():
    omega2 = derive_omega2(LieAlgebra.abelian(4), standard_j(), omega1_template())
    assert omega2.terms == {(0, 1): F(1), (2, 3): F(-1)}


def test_derive_omega2_aff_extension():
    # [f1,f2]=f2, [f1,f3]=-f3, [f1,f4]=f4
    g = LieAlgebra(
        4,
        {
            (0, 1): [0, F(1), 0, 0],
            (0, 2): [0, 0, F(-1), 0],
            (0, 3): [0, 0, 0, F(1)],
        },
    )
    omega2 = derive_omega2(g, standard_j(), omega1_template())
    assert omega2.terms == {(0, 1): F(1), (2, 3): F(-1)}


def test_derive_omega2_rejects_incompatible():
    bad = ExteriorForm(4, 2, {(0, 1): F(1), (2, 3): F(1)})
    with pytest.raises(StructureError):
        derive_omega2(kt4(), standard_j(), bad)


def test_certify_accepts_the_three_four_dim_cases():
    cases = [
        kt4(),
        LieAlgebra(4, {(0, 1): [0, F(1), 0, 0], (0, 2): [0, 0, F(-1), 0],
                       (0, 3): [0, 0, 0, F(1)]}),
        LieAlgebra(4, {(0, 1): [0, F(1), 0, 0], (0, 2): [0, 0, F(-1, 2), 0],
                       (0, 3): [0, 0, 0, F(1, 2)], (1, 2): [0, 0, 0, F(-1, 2)]}),
    ]
    for g in cases:
        report, structure = certify_complex_symplectic(g, standard_j(), omega1_template())
        assert report.ok(), report.to_text()
        assert structure is not None
        assert structure.omega2.terms == {(0, 1): F(1), (2, 3): F(-1)}


def test_certify_trivial_abelian():
    report, structure = certify_complex_symplectic(
        LieAlgebra.abelian(4), standard_j(), omega1_template()
    )
    assert report.ok()
    assert structure is not None


def test_certify_rejects_bad_omega_with_witnesses():
    bad = ExteriorForm(4, 2, {(0, 1): F(1)})
    report, structure = certify_complex_symplectic(kt4(), standard_j(), bad)
    assert structure is None
    failed = {c.id for c in report.failures()}
    assert "omega1-nondegenerate" in failed
    assert "omega1-j-compatibility" in failed
    witness = next(c.witness for c in report.checks if c.id == "omega1-j-compatibility")
    assert witness == (0, 3)


def test_compose_form_is_precomposition_in_first_slot():
    omega = omega1_template()
    j = standard_j()
    composed = compose_form(omega, j)
    for a in range(4):
        for b in range(4):
            ea = [F(1) if i == a else F(0) for i in range(4)]
            eb = [F(1) if i == b else F(0) for i in range(4)]
            assert composed(ea, eb) == omega(j.matvec(ea), eb)


def test_lagrangian_splitting_kt4_good_and_bad():
    g = kt4()
    sub = [[F(1), F(0), F(0), F(0)], [F(0), F(1), F(0), F(0)]]
    ideal = [[F(0), F(0), F(1), F(0)], [F(0), F(0), F(0), F(1)]]
    report = check_lagrangian_splitting(g, standard_j(), omega1_template(), sub, ideal)
    assert report.ok(), report.to_text()

    bad_sub = [[F(1), F(0), F(0), F(0)], [F(0), F(0), F(0), F(1)]]
    bad_ideal = [[F(0), F(1), F(0), F(0)], [F(0), F(0), F(1), F(0)]]
    report = check_lagrangian_splitting(g, standard_j(), omega1_template(), bad_sub, bad_ideal)
    failed = {c.id for c in report.failures()}
    assert "ideal" in failed  # [f1, f3] = f4 leaves span{f2, f3}
    assert "isotropic-subalgebra" in failed  # omega1(f1, f4) = -1


def test_product_structure_report():
    g = kt4()
    e = Matrix(
        [
            [F(1), F(0), F(0), F(0)],
            [F(0), F(1), F(0), F(0)],
            [F(0), F(0), F(-1), F(0)],
            [F(0), F(0), F(0), F(-1)],
        ]
    )
    assert is_product_structure(g, e).ok()


def test_neutral_metric_report():
    m = Matrix(
        [
            [F(0), F(0), F(0), F(-1)],
            [F(0), F(0), F(1), F(0)],
            [F(0), F(1), F(0), F(0)],
            [F(-1), F(0), F(0), F(0)],
        ]
    )
    report = neutral_metric_report(m)
    assert report.ok()
    sig = next(c.witness for c in report.checks if c.id == "metric-signature")
    assert sig == [2, 2, 0]
