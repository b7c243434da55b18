import numpy as np
import pytest

from schurkit.channels import (
    channel_normal_form,
    invariant_basis,
    kronecker,
    phi_lambda,
)
from schurkit.characters import young_orthogonal
from schurkit.combinatorics import dim_p, enumerate_partitions
from schurkit.permutations import all_permutations

DEPHASING = np.array(
    [[1, 0], [0, 0], [0, 0], [0, 1]], dtype=complex
)  # |i> -> |i>_B |i>_E
IDENTITY = np.array(
    [[1, 0], [0, 0], [0, 1], [0, 0]], dtype=complex
)  # |i> -> |i>_B |0>_E


def test_kronecker_known_values():
    # coupling with the trivial shape reduces to the orthogonality of irreps
    assert kronecker((3,), (3,), (3,)) == 1
    assert kronecker((3,), (2, 1), (2, 1)) == 1
    assert kronecker((3,), (2, 1), (3,)) == 0
    assert kronecker((2, 1), (2, 1), (2, 1)) == 1
    assert kronecker((1, 1, 1), (2, 1), (2, 1)) == 1


def test_kronecker_symmetry_and_size_mismatch():
    assert (
        kronecker((2, 1), (1, 1, 1), (2, 1))
        == kronecker((1, 1, 1), (2, 1), (2, 1))
        == kronecker((2, 1), (2, 1), (1, 1, 1))
    )
    with pytest.raises(ValueError):
        kronecker((2,), (1,), (2,))


@pytest.mark.parametrize("n", [2, 3])
def test_invariant_basis_count_and_orthonormality(n):
    for la in enumerate_partitions(n, n):
        for lb in enumerate_partitions(n, n):
            for lc in enumerate_partitions(n, n):
                vecs = invariant_basis(la, lb, lc)
                assert len(vecs) == kronecker(la, lb, lc)
                for i, v in enumerate(vecs):
                    for j, w in enumerate(vecs):
                        assert abs(float(v @ w) - (i == j)) < 1e-10


def test_invariant_basis_vectors_are_fixed_points():
    la, lb, lc = (2, 1), (2, 1), (2, 1)
    (v,) = invariant_basis(la, lb, lc)
    for s in all_permutations(3):
        m = np.kron(
            young_orthogonal(la, s),
            np.kron(young_orthogonal(lb, s), young_orthogonal(lc, s)),
        )
        assert np.abs(m @ v - v).max() < 1e-10


def test_phi_lambda_is_normalized_and_invariant():
    for lam in enumerate_partitions(4, 4):
        v = phi_lambda(lam)
        assert abs(np.linalg.norm(v) - 1.0) < 1e-12
        n = sum(lam)
        for s in all_permutations(n)[:6]:
            m = np.kron(young_orthogonal(lam, s), young_orthogonal(lam, s))
            assert np.abs(m @ v - v).max() < 1e-10


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dephasing_normal_form_round_trip(n):
    nf = channel_normal_form(DEPHASING, n)
    assert nf.reconstruction_residual < 1e-12
    assert nf.isometry_residual < 1e-12
    for key in nf.coefficients:
        lam_a, _, lam_b, lam_e, _, _, _ = key
        assert kronecker(lam_a, lam_b, lam_e) > 0


def test_identity_channel_support():
    nf = channel_normal_form(IDENTITY, 2)
    assert nf.reconstruction_residual < 1e-12
    assert nf.isometry_residual < 1e-12
    for lam_a, _, lam_b, lam_e, _, _, _ in nf.coefficients:
        assert lam_b == lam_a
        assert lam_e == (2,)


def test_channel_normal_form_rejects_non_isometry():
    with pytest.raises(ValueError):
        channel_normal_form(np.ones((4, 2)), 2)
    with pytest.raises(ValueError):
        channel_normal_form(np.eye(3), 2)


def test_dephasing_n2_coefficients_match_dense_conjugation():
    """Every coefficient is an inner product of the densely conjugated
    isometry with an explicit (invariant vector x basis) column, recomputed
    here from scratch."""
    from schurkit.schur_transform import schur_unitary

    nf = channel_normal_form(DEPHASING, 2)
    su, codec = schur_unitary(2, 2)
    big = np.kron(DEPHASING, DEPHASING)
    # reorder outputs (b1 e1 b2 e2) -> (b1 b2 e1 e2)
    big = big.reshape(2, 2, 2, 2, 4).transpose(0, 2, 1, 3, 4).reshape(16, 4)
    conj = np.kron(su.matrix, su.matrix) @ big @ su.matrix.T
    for key, c in nf.coefficients.items():
        lam_a, qa, lam_b, lam_e, qb, qe, alpha = key
        v = nf.bases[(lam_a, lam_b, lam_e)][alpha]
        ka, kb, ke = dim_p(lam_a), dim_p(lam_b), dim_p(lam_e)
        v3 = v.reshape(ka, kb, ke)
        got = 0.0
        for pa in range(ka):
            for pb in range(kb):
                for pe in range(ke):
                    row = codec.index(lam_b, qb, pb + 1) * 4 + codec.index(
                        lam_e, qe, pe + 1
                    )
                    col = codec.index(lam_a, qa, pa + 1)
                    got += v3[pa, pb, pe] * conj[row, col]
        assert abs(got - c) < 1e-12
