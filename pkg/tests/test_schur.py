import pytest

from crystalbench.crystal import character
from crystalbench.schur import (ExactPolynomial, complete_homogeneous, decompose_into_schur,
                                dim_of, is_symmetric, lr_oracle, schur, structure_constants)
from crystalbench.tableaux import crystal_of
from crystalbench.weights import enumerate_partitions


def test_schur_examples():
    assert schur((1, 0), 2) == ExactPolynomial(2, {(1, 0): 1, (0, 1): 1})
    assert schur((1, 1), 2) == ExactPolynomial(2, {(1, 1): 1})
    assert schur((2, 1), 2) == ExactPolynomial(2, {(2, 1): 1, (1, 2): 1})
    assert str(schur((2, 1), 2)) == "x1^2*x2 + x1*x2^2"


def test_schur_rejects_too_many_rows():
    with pytest.raises(ValueError):
        schur((1, 1, 1), 2)


def test_decompose_examples():
    s1 = schur((1, 0), 2)
    assert decompose_into_schur(s1 * s1, 2) == {(2, 0): 1, (1, 1): 1}
    assert decompose_into_schur(schur((2, 1, 0), 3), 3) == {(2, 1, 0): 1}
    e2 = schur((1, 1, 0), 3)
    assert decompose_into_schur(e2 * e2, 3) == {(2, 2, 0): 1, (2, 1, 1): 1}


def test_decompose_rejects_non_symmetric():
    with pytest.raises(ValueError):
        decompose_into_schur(ExactPolynomial(2, {(1, 0): 1}), 2)
    assert not is_symmetric(ExactPolynomial(2, {(2, 0): 1}))


def test_dim_examples():
    for n in range(1, 6):
        assert dim_of((1,) + (0,) * (n - 1), n) == n
        if n >= 2:
            assert dim_of((1, 1) + (0,) * (n - 2), n) == n * (n - 1) // 2
    for w in range(6):
        assert dim_of((w, 0), 2) == w + 1


def test_complete_homogeneous():
    assert complete_homogeneous(2, 2) == ExactPolynomial(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert complete_homogeneous(0, 3) == ExactPolynomial.one(3)


def test_polynomial_arithmetic():
    x = ExactPolynomial(2, {(1, 0): 1})
    y = ExactPolynomial(2, {(0, 1): 1})
    assert (x + y) * (x - y) == ExactPolynomial(2, {(2, 0): 1, (0, 2): -1})
    assert (x + y).evaluate((2, 3)) == 5
    assert (x - x) == ExactPolynomial(2)
    with pytest.raises(ValueError):
        x + ExactPolynomial(3, {(1, 0, 0): 1})


@pytest.mark.parametrize("n", [2, 3, 4])
def test_schur_matches_tableau_character(n):
    for k in range(5):
        for lam in enumerate_partitions(n, k):
            assert dict(character(crystal_of(lam, n))) == schur(lam, n).terms


def test_lr_oracle_examples():
    assert lr_oracle((1, 1, 0, 0), (1, 1, 0, 0), (2, 1, 1, 0), 4) == 1
    assert lr_oracle((2, 1, 0), (2, 1, 0), (3, 2, 1), 3) == 2
    assert structure_constants((1, 0), (1, 0), 2) == {(2, 0): 1, (1, 1): 1}
