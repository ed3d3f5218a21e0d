import random
from fractions import Fraction

import pytest

from csymlie.forms import ExteriorForm, standard_symplectic_pairs
from csymlie.matrices import Matrix


def sorted_with_parity(indices):
    """Oracle for wedge signs: bubble sort counting transpositions."""
    idx = list(indices)
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    if len(set(idx)) != len(idx):
        return tuple(idx), 0
    return tuple(idx), sign


def wedge_oracle(a, b):
    """Term-by-term bilinear expansion, independent of ExteriorForm.wedge."""
    terms = {}
    for ia, ca in a.terms.items():
        for ib, cb in b.terms.items():
            idx, sign = sorted_with_parity(ia + ib)
            if sign == 0:
                continue
            terms[idx] = terms.get(idx, Fraction(0)) + sign * ca * cb
    return {k: v for k, v in terms.items() if v}


def test_wedge_basis_covectors():
    e1 = ExteriorForm.covector(4, 0)
    e2 = ExteriorForm.covector(4, 1)
    w = e1.wedge(e2)
    assert w.terms == {(0, 1): Fraction(1)}


def test_wedge_alternation():
    e1 = ExteriorForm.covector(4, 0)
    assert e1.wedge(e1).is_zero()


def test_wedge_square_of_two_form():
    # (-f1^f4 + f2^f3) ^ (-f1^f4 + f2^f3) = -2 f1^f2^f3^f4
    omega = ExteriorForm(4, 2, {(0, 3): Fraction(-1), (1, 2): Fraction(1)})
    sq = omega.wedge(omega)
    expected = wedge_oracle(omega, omega)
    assert sq.terms == expected
    assert sq.terms == {(0, 1, 2, 3): Fraction(-2)}


def random_form(rng, dim, degree, nterms=3):
    terms = {}
    for _ in range(nterms):
        idx = tuple(sorted(rng.sample(range(dim), degree)))
        terms[idx] = Fraction(rng.randint(-4, 4))
    return ExteriorForm(dim, degree, terms)


def test_wedge_matches_oracle_and_graded_commutativity():
    rng = random.Random(3)
    for _ in range(40):
        p = rng.randint(1, 3)
        q = rng.randint(1, 3)
        a = random_form(rng, 6, p)
        b = random_form(rng, 6, q)
        ab = a.wedge(b)
        assert ab.terms == wedge_oracle(a, b)
        ba = b.wedge(a)
        sign = (-1) ** (p * q)
        assert ab == (ba if sign == 1 else -ba)


def test_wedge_dimension_mismatch():
    with pytest.raises(ValueError):
        ExteriorForm.covector(3, 0).wedge(ExteriorForm.covector(4, 0))


def test_evaluation_and_contraction_agree():
    rng = random.Random(5)
    for _ in range(20):
        form = random_form(rng, 5, 2)
        v = [Fraction(rng.randint(-3, 3)) for _ in range(5)]
        w = [Fraction(rng.randint(-3, 3)) for _ in range(5)]
        assert form(v, w) == form.contract(v)(w)


def test_matrix_round_trip():
    omega = ExteriorForm(4, 2, {(0, 3): Fraction(-1), (1, 2): Fraction(1)})
    m = omega.as_matrix()
    assert m.rows[0][3] == -1 and m.rows[3][0] == 1
    assert ExteriorForm.from_matrix(m) == omega


def test_pullback_is_precomposition():
    omega = ExteriorForm(2, 2, {(0, 1): Fraction(1)})
    a = Matrix([[Fraction(2), Fraction(1)], [Fraction(0), Fraction(3)]])
    pb = omega.pullback(a)
    # det(a) scales the top form
    assert pb.terms == {(0, 1): Fraction(6)}


def test_standard_symplectic_conventions():
    adj = standard_symplectic_pairs(2, "adjacent")
    assert adj.terms == {(0, 1): Fraction(1), (2, 3): Fraction(1)}
    spl = standard_symplectic_pairs(2, "split")
    assert spl.terms == {(0, 2): Fraction(1), (1, 3): Fraction(1)}


def test_rejects_bad_tuples():
    with pytest.raises(ValueError):
        ExteriorForm(3, 2, {(1, 1): Fraction(1)})
    with pytest.raises(ValueError):
        ExteriorForm(3, 2, {(2, 1): Fraction(1)})
