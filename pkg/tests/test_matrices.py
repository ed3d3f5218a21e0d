import random
from fractions import Fraction
from itertools import permutations

import pytest

from csymlie.matrices import Matrix, congruence_signature, in_span, row_space_basis


def cofactor_det(m):
    """Independent determinant oracle: Leibniz expansion over permutations."""
    n = m.nrows
    total = Fraction(0)
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        prod = Fraction(1)
        for i in range(n):
            prod *= m.rows[i][perm[i]]
        total += sign * prod
    return total


def random_matrix(rng, n, span=6):
    return Matrix(
        [
            [Fraction(rng.randint(-span, span), rng.randint(1, 4)) for _ in range(n)]
            for _ in range(n)
        ]
    )


def test_det_matches_cofactor_expansion_small_dims():
    rng = random.Random(7)
    for n in (1, 2, 3, 4):
        for _ in range(25):
            m = random_matrix(rng, n)
            assert m.det() == cofactor_det(m)


def test_inverse_and_solve():
    m = Matrix([[Fraction(2), Fraction(1)], [Fraction(5), Fraction(3)]])
    inv = m.inverse()
    assert m @ inv == Matrix.identity(2)
    x = m.solve([Fraction(1), Fraction(4)])
    assert m.matvec(x) == [Fraction(1), Fraction(4)]


def test_singular_inverse_raises():
    with pytest.raises(ValueError):
        Matrix([[1, 2], [2, 4]]).map(Fraction).inverse()


def test_kernel_basis():
    m = Matrix([[Fraction(1), Fraction(2), Fraction(3)]])
    ker = m.kernel_basis()
    assert len(ker) == 2
    for v in ker:
        assert m.matvec(v) == [Fraction(0)]


def test_signature_identity():
    assert congruence_signature(Matrix.identity(2)) == (2, 0, 0)


def test_signature_already_diagonal():
    m = Matrix([[Fraction(1), 0, 0], [0, Fraction(-1), 0], [0, 0, Fraction(0)]])
    assert congruence_signature(m) == (1, 1, 1)


def test_signature_hollow_block():
    # zero diagonal, neutral plane
    m = Matrix([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]])
    assert congruence_signature(m) == (1, 1, 0)


def test_signature_rejects_nonsymmetric_with_witness():
    m = Matrix([[Fraction(0), Fraction(1)], [Fraction(2), Fraction(0)]])
    with pytest.raises(ValueError, match=r"\(0, 1\)"):
        congruence_signature(m)


def test_signature_congruence_invariance():
    rng = random.Random(11)
    base = Matrix(
        [
            [Fraction(2), Fraction(1), Fraction(0)],
            [Fraction(1), Fraction(-1), Fraction(3)],
            [Fraction(0), Fraction(3), Fraction(0)],
        ]
    )
    sig = congruence_signature(base)
    found = 0
    while found < 10:
        p = random_matrix(rng, 3, span=3)
        if not p.det():
            continue
        found += 1
        assert congruence_signature(p.transpose() @ base @ p) == sig


def test_row_space_and_span_membership():
    vecs = [[Fraction(1), Fraction(1), Fraction(0)], [Fraction(2), Fraction(2), Fraction(0)]]
    basis = row_space_basis(vecs, 3)
    assert len(basis) == 1
    assert in_span(basis, [Fraction(3), Fraction(3), Fraction(0)])
    assert not in_span(basis, [Fraction(0), Fraction(0), Fraction(1)])
