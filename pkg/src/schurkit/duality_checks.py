"""Extraction of irrep matrices from the Schur transform and numerical
verification that it simultaneously block-diagonalizes the collective
unitary action and the qudit-permutation action.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .characters import young_orthogonal
from .combinatorics import dim_p, dim_q, enumerate_partitions, normalize, schur_poly
from .operators import (
    DenseOperator,
    permute_columns_like,
    real_complex_matmul,
    right_multiply_collective,
)
from .schur_transform import schur_unitary


def _require_unitary(u: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError("expected a square matrix")
    if np.abs(u.conj().T @ u - np.eye(u.shape[0])).max() > tol:
        raise ValueError("matrix is not unitary within tolerance")
    return u


def _conjugated_collective(a: np.ndarray, d: int, n: int) -> np.ndarray:
    """S a^{tensor n} S^dagger with S the Schur transform (S is real)."""
    s, _ = schur_unitary(d, n)
    return real_complex_matmul(right_multiply_collective(s.matrix, a, n), s.matrix.T)


def rep_matrix_q(lam, u, d: int, n: int) -> DenseOperator:
    """The unitary-group irrep matrix q_lam(u) on the GZ basis, extracted
    from the Schur conjugation of u^{tensor n} at a fixed path index."""
    lam = normalize(lam)
    u = _require_unitary(u)
    s, codec = schur_unitary(d, n)
    w = _conjugated_collective(u, d, n)
    rows = [codec.index(lam, qi, 1) for qi in range(1, dim_q(lam, d) + 1)]
    block = w[np.ix_(rows, rows)]
    labels = [qi for qi in range(1, dim_q(lam, d) + 1)]
    return DenseOperator(block, row_labels=labels, col_labels=labels)


def rep_matrix_p(lam, s, d: int = None, n: int = None) -> DenseOperator:
    """The symmetric-group irrep matrix p_lam(s) on the path basis,
    extracted from the Schur conjugation of the qudit permutation at a fixed
    GZ index.  Independent of which d >= rows(lam) is used."""
    lam = normalize(lam)
    if n is None:
        n = len(s)
    if sum(lam) != n or len(s) != n:
        raise ValueError("lam and s must have matching size n")
    if d is None:
        d = max(len(lam), 1)
    if len(lam) > d:
        raise ValueError("lam has more than d rows")
    su, codec = schur_unitary(d, n)
    w = permute_columns_like(su.matrix, tuple(s), d) @ su.matrix.T
    np_ = dim_p(lam)
    rows = [codec.index(lam, 1, pi) for pi in range(1, np_ + 1)]
    block = w[np.ix_(rows, rows)]
    labels = list(range(1, np_ + 1))
    return DenseOperator(block, row_labels=labels, col_labels=labels)


@dataclass
class IrrepBlockReport:
    """Result of a simultaneous block-diagonalization check."""

    d: int
    n: int
    leakage: float
    factor_residuals: dict = field(default_factory=dict)
    blocks: dict = field(default_factory=dict)

    @property
    def worst_factor_residual(self) -> float:
        return max(self.factor_residuals.values()) if self.factor_residuals else 0.0


def verify_block_diagonal(u, s, d: int, n: int, tol: float = 1e-10) -> IrrepBlockReport:
    """Conjugate u^{tensor n} P(s) by the Schur transform, measure the mass
    outside the lam-diagonal blocks, and test that each block factors as
    (collective factor) tensor p_lam(s) with p_lam built independently from
    tableau contents."""
    u = _require_unitary(u, tol=max(tol, 1e-8))
    su, codec = schur_unitary(d, n)
    # S (u^{tensor n} P(s)) S^T, applying the tensor power one site at a time
    left = permute_columns_like(right_multiply_collective(su.matrix, u, n), tuple(s), d)
    w = real_complex_matmul(left, su.matrix.T)
    report = IrrepBlockReport(d=d, n=n, leakage=0.0)
    absw = np.abs(w)
    for lam in enumerate_partitions(d, n):
        sl = codec.block_slice(lam)
        absw[sl, sl] = 0.0
        block = w[sl, sl]
        nq, np_ = dim_q(lam, d), dim_p(lam)
        p_mat = young_orthogonal(lam, s)
        # best collective factor by contracting the known permutation factor
        b4 = block.reshape(nq, np_, nq, np_)
        q_hat = np.einsum("apbq,pq->ab", b4, p_mat) / np_
        residual = np.abs(block - np.kron(q_hat, p_mat)).max()
        report.factor_residuals[lam] = float(residual)
        report.blocks[lam] = DenseOperator(block)
    report.leakage = float(absw.max())
    return report


def rho_blocks(rho, n: int) -> dict:
    """Decompose rho^{tensor n} through the Schur transform.

    Returns lam -> (weight, q_factor, p_state) where weight is the sector
    mass dim_p * schur_poly(lam, spec rho), q_factor the collective-register
    block q_lam(rho) (trace = schur_poly), and p_state the conditional
    permutation-register density matrix (maximally mixed for product
    inputs).
    """
    rho = np.asarray(rho, dtype=complex)
    d = rho.shape[0]
    if rho.shape != (d, d):
        raise ValueError("rho must be square")
    if np.abs(rho - rho.conj().T).max() > 1e-10:
        raise ValueError("rho must be Hermitian")
    evals = np.linalg.eigvalsh(rho)
    if evals.min() < -1e-10 or abs(rho.trace().real - 1.0) > 1e-10:
        raise ValueError("rho must be a density matrix (PSD, trace 1)")
    su, codec = schur_unitary(d, n)
    w = _conjugated_collective(rho, d, n)
    out = {}
    for lam in enumerate_partitions(d, n):
        sl = codec.block_slice(lam)
        nq, np_ = dim_q(lam, d), dim_p(lam)
        b4 = w[sl, sl].reshape(nq, np_, nq, np_)
        q_block = np.einsum("apbp->ab", b4)  # trace over the p register
        p_block = np.einsum("apaq->pq", b4)  # trace over the q register
        weight = float(q_block.trace().real)
        q_factor = q_block / np_
        p_state = p_block / weight if weight > 1e-300 else np.eye(np_) / np_
        out[lam] = (weight, q_factor, p_state)
    return out


def spectral_weights(rho, n: int) -> dict:
    """lam -> dim_p(lam) * schur_poly(lam, spec rho): the sector masses of
    rho^{tensor n} computed without any d^n-dimensional object."""
    rho = np.asarray(rho, dtype=complex)
    d = rho.shape[0]
    spec = sorted(np.linalg.eigvalsh(rho).real, reverse=True)
    spec = [max(x, 0.0) for x in spec]
    return {
        lam: dim_p(lam) * float(schur_poly(lam, spec))
        for lam in enumerate_partitions(d, n)
    }
