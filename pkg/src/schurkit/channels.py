"""Symmetric-group Kronecker coefficients, invariant tripartite vectors,
and the normal form of n copies of a channel isometry under collective
Schur rotations on input and on both output factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .characters import character, young_orthogonal
from .combinatorics import dim_p, dim_q, enumerate_partitions, normalize
from .permutations import all_permutations, conjugacy_classes
from .schur_transform import schur_unitary


def kronecker(lam_a, lam_b, lam_c) -> int:
    """Multiplicity of the trivial irrep in P_a tensor P_b tensor P_c:
    (1/n!) sum_s chi_a(s) chi_b(s) chi_c(s), summed by conjugacy class.
    Symmetric in all three arguments."""
    lam_a, lam_b, lam_c = normalize(lam_a), normalize(lam_b), normalize(lam_c)
    n = sum(lam_a)
    if sum(lam_b) != n or sum(lam_c) != n:
        raise ValueError("all three partitions must have the same size")
    total = 0
    for rho, size in conjugacy_classes(n).items():
        total += size * character(lam_a, rho) * character(lam_b, rho) * character(lam_c, rho)
    q, r = divmod(total, math.factorial(n))
    assert r == 0
    return q


def phi_lambda(lam) -> np.ndarray:
    """The unique (up to phase) vector in P_lam tensor P_lam invariant under
    the diagonal action: (1/sqrt(dim_p)) sum_p |p, p>."""
    k = dim_p(normalize(lam))
    v = np.zeros(k * k)
    for p in range(k):
        v[p * k + p] = 1.0
    return v / math.sqrt(k)


def invariant_basis(lam_a, lam_b, lam_c) -> list:
    """Orthonormal basis of the subspace of P_a tensor P_b tensor P_c fixed
    by every diagonal p(s) tensor p(s) tensor p(s); length = kronecker.

    Deterministic: the group-average projector's SVD, keeping singular value
    1 directions, each normalized so its first nonzero entry is positive.
    """
    lam_a, lam_b, lam_c = normalize(lam_a), normalize(lam_b), normalize(lam_c)
    n = sum(lam_a)
    ka, kb, kc = dim_p(lam_a), dim_p(lam_b), dim_p(lam_c)
    dim = ka * kb * kc
    acc = np.zeros((dim, dim))
    for s in all_permutations(n):
        acc += np.kron(
            young_orthogonal(lam_a, s),
            np.kron(young_orthogonal(lam_b, s), young_orthogonal(lam_c, s)),
        )
    acc /= math.factorial(n)
    u, sv, _ = np.linalg.svd(acc)
    out = []
    for i, s in enumerate(sv):
        if s > 0.5:
            v = u[:, i]
            lead = np.flatnonzero(np.abs(v) > 1e-12)[0]
            out.append(v if v[lead] > 0 else -v)
    assert len(out) == kronecker(lam_a, lam_b, lam_c)
    return out


@dataclass
class ChannelNormalForm:
    n: int
    coefficients: dict  # (lamA, qA, lamB, lamE, qB, qE, alpha) -> complex
    bases: dict  # (lamA, lamB, lamE) -> list of invariant vectors
    reconstruction_residual: float
    isometry_residual: float


def _interleave(n: int, db: int, de: int) -> list:
    """Axis order moving (b1 e1 ... bn en) to (b1..bn e1..en)."""
    return list(range(0, 2 * n, 2)) + list(range(1, 2 * n, 2))


def channel_normal_form(u_n: np.ndarray, n: int, da: int = 2, db: int = 2, de: int = 2) -> ChannelNormalForm:
    """Decompose u_n^{tensor n} (u_n an isometry C^da -> C^db tensor C^de)
    in the Schur bases of the input and of both output factors.

    By collective covariance the permutation-register part of every
    (lamA, lamB, lamE) block lies in the span of the diagonal-invariant
    vectors; the returned coefficients are the expansion in that basis and
    reconstruct the conjugated isometry exactly (residual reported).
    """
    u_n = np.asarray(u_n, dtype=complex)
    if u_n.shape != (db * de, da):
        raise ValueError("isometry must map C^da into C^db tensor C^de")
    if np.abs(u_n.conj().T @ u_n - np.eye(da)).max() > 1e-10:
        raise ValueError("input is not an isometry")
    big = np.array([[1.0 + 0j]])
    for _ in range(n):
        big = np.kron(big, u_n)
    # reorder output factors from (b1 e1 ... bn en) to (b1..bn e1..en)
    big = big.reshape((db, de) * n + (da**n,))
    big = np.transpose(big, _interleave(n, db, de) + [2 * n])
    big = big.reshape(db**n * de**n, da**n)
    sa, codec_a = schur_unitary(da, n)
    sb, codec_b = schur_unitary(db, n)
    se, codec_e = schur_unitary(de, n)
    conj = np.kron(sb.matrix, se.matrix) @ big @ sa.matrix.T
    coefficients = {}
    bases = {}
    recon = np.zeros_like(conj)
    for lam_a in enumerate_partitions(da, n):
        sl_a = codec_a.block_slice(lam_a)
        ka, nqa = dim_p(lam_a), dim_q(lam_a, da)
        for lam_b in enumerate_partitions(db, n):
            sl_b = codec_b.block_slice(lam_b)
            kb, nqb = dim_p(lam_b), dim_q(lam_b, db)
            for lam_e in enumerate_partitions(de, n):
                sl_e = codec_e.block_slice(lam_e)
                ke, nqe = dim_p(lam_e), dim_q(lam_e, de)
                # tensor over the joint output rows and input cols
                blk = conj[:, sl_a].reshape(
                    sb.matrix.shape[0], se.matrix.shape[0], nqa, ka
                )[sl_b.start : sl_b.stop, sl_e.start : sl_e.stop, :, :]
                t = blk.reshape(nqb, kb, nqe, ke, nqa, ka)
                if not np.abs(t).max() > 1e-14:
                    continue
                key3 = (lam_a, lam_b, lam_e)
                if key3 not in bases:
                    bases[key3] = invariant_basis(lam_a, lam_b, lam_e)
                vecs = bases[key3]
                if not vecs:
                    continue
                for qb in range(nqb):
                    for qe in range(nqe):
                        for qa in range(nqa):
                            # permutation part as a vector over (pA, pB, pE)
                            w = np.transpose(t[qb, :, qe, :, qa, :], (2, 0, 1)).reshape(-1)
                            for alpha, v in enumerate(vecs):
                                c = complex(v @ w)
                                if abs(c) > 1e-14:
                                    coefficients[
                                        (lam_a, qa + 1, lam_b, lam_e, qb + 1, qe + 1, alpha)
                                    ] = c
                                rec = c * v.reshape(ka, kb, ke)
                                t_rec = np.transpose(rec, (1, 2, 0))
                                recon_blk = recon[:, sl_a].reshape(
                                    sb.matrix.shape[0], se.matrix.shape[0], nqa, ka
                                )
                                recon_blk[
                                    sl_b.start + qb * kb : sl_b.start + (qb + 1) * kb,
                                    sl_e.start + qe * ke : sl_e.start + (qe + 1) * ke,
                                    qa,
                                    :,
                                ] += t_rec
    residual = float(np.abs(conj - recon).max())
    # isometry relation: for each lamA, the coefficient matrix
    # [rows (lamB,lamE,qB,qE,alpha)] x [cols qA] has V dagger V = dim_p(lamA) I
    iso_res = 0.0
    for lam_a in enumerate_partitions(da, n):
        nqa, ka = dim_q(lam_a, da), dim_p(lam_a)
        rows = sorted({k[2:] for k in coefficients if k[0] == lam_a})
        v = np.zeros((len(rows), nqa), dtype=complex)
        index = {r: i for i, r in enumerate(rows)}
        for key, c in coefficients.items():
            if key[0] != lam_a:
                continue
            v[index[key[2:]], key[1] - 1] = c
        gram = v.conj().T @ v / ka
        iso_res = max(iso_res, float(np.abs(gram - np.eye(nqa)).max()))
    return ChannelNormalForm(
        n=n,
        coefficients=coefficients,
        bases=bases,
        reconstruction_residual=residual,
        isometry_residual=iso_res,
    )
