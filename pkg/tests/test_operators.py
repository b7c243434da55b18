import numpy as np
import pytest
from conftest import haar_unitary, random_permutation

from schurkit.operators import (
    DenseOperator,
    collective_unitary,
    permutation_action,
    permute_columns_like,
    real_complex_matmul,
)
from schurkit.permutations import all_permutations, compose


def test_dense_operator_labels_and_lookup():
    op = DenseOperator(np.arange(6).reshape(2, 3), ["a", "b"], ["x", "y", "z"])
    assert op.shape == (2, 3)
    assert op["b", "z"] == 5
    assert op.dagger().shape == (3, 2)
    with pytest.raises(ValueError):
        DenseOperator(np.eye(2), ["only-one"], ["a", "b"])


def test_permutation_action_convention():
    # the qudit at position k moves to position s(k)
    d = 2
    s = (2, 3, 1)  # position 1 -> 2, 2 -> 3, 3 -> 1
    p = permutation_action(s, d)
    basis = np.zeros(8)
    basis[0b011] = 1.0  # |0 1 1>
    out = p @ basis
    # digit from position 1 (0) lands at position 2, etc: |1 0 1>
    assert out[0b101] == 1.0


def test_permutation_action_is_a_representation():
    d, n = 2, 3
    for s in all_permutations(n):
        for t in all_permutations(n):
            lhs = permutation_action(compose(s, t), d)
            rhs = permutation_action(s, d) @ permutation_action(t, d)
            assert np.array_equal(lhs, rhs)


def test_permute_columns_like_matches_dense_product(rng):
    d, n = 2, 4
    m = rng.normal(size=(5, d**n))
    s = random_permutation(rng, n)
    assert np.array_equal(
        permute_columns_like(m, s, d), m @ permutation_action(s, d)
    )


def test_collective_unitary(rng):
    u = haar_unitary(rng, 2)
    big = collective_unitary(u, 3)
    assert np.abs(big - np.kron(u, np.kron(u, u))).max() < 1e-12


def test_real_complex_matmul_matches_dense(rng):
    a = rng.normal(size=(6, 6))
    b = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
    assert np.abs(real_complex_matmul(a, b) - a @ b).max() < 1e-12
    assert np.abs(real_complex_matmul(b, a) - b @ a).max() < 1e-12
    assert np.abs(real_complex_matmul(b, b) - b @ b).max() < 1e-12
    assert np.abs(real_complex_matmul(a, a) - a @ a).max() < 1e-12
