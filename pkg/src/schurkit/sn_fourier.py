"""The symmetric-group quantum Fourier transform obtained by restricting
the Schur transform to the group-algebra embedding, and generalized phase
estimation: measuring the partition label of a state with a group-algebra
ancilla and controlled qudit permutations instead of the Schur unitary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .characters import young_orthogonal
from .combinatorics import dim_p, enumerate_gz, enumerate_partitions, gz_weight
from .operators import DenseOperator, permutation_action
from .permutations import all_permutations, compose, inverse, perm_index, transposition
from .schur_transform import central_projector_oracle, dense_cap, schur_unitary


def group_algebra_embedding(n: int) -> np.ndarray:
    """Indices embedding |s> -> |s(1), ..., s(n)> into (C^n)^{tensor n}.

    Entry k is the computational index of the image of the k-th permutation
    in all_permutations(n) lexicographic order.
    """
    out = np.empty(math.factorial(n), dtype=np.intp)
    for k, s in enumerate(all_permutations(n)):
        idx = 0
        for v in s:
            idx = idx * n + (v - 1)
        out[k] = idx
    return out


@dataclass
class FourierBlockLayout:
    """Row layout of the Fourier transform: per-partition blocks of size
    dim_p^2 with rows ordered (left index, right index)."""

    n: int
    blocks: list = field(default_factory=list)  # (lam, row slice)

    def block(self, lam) -> slice:
        for l, sl in self.blocks:
            if l == lam:
                return sl
        raise KeyError(lam)


def sn_qft_from_schur(n: int):
    """The n! x n! Fourier transform on the group algebra, as the Schur
    transform of (C^n)^{tensor n} restricted to the embedded group algebra.

    Rows are (lam, a, b) with a indexing the multiplicity register (the
    all-distinct-letters weight space, one copy of the irrep) and b the
    permutation register.  Left multiplication acts on a, right (inverse)
    multiplication on b; each block matches the standard Fourier convention
    up to a fixed sign on each row.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n**n > dense_cap():
        raise ValueError("n too large for the dense group-algebra embedding")
    su, codec = schur_unitary(n, n)
    cols = group_algebra_embedding(n)
    rows = []
    layout = FourierBlockLayout(n=n)
    start = 0
    for lam in enumerate_partitions(n, n):
        patterns = enumerate_gz(lam, n)
        multiplicity = [
            qi + 1 for qi, g in enumerate(patterns) if gz_weight(g) == (1,) * n
        ]
        assert len(multiplicity) == dim_p(lam)
        for qi in multiplicity:
            for pi in range(1, dim_p(lam) + 1):
                rows.append(codec.index(lam, qi, pi))
        layout.blocks.append((lam, slice(start, start + dim_p(lam) ** 2)))
        start += dim_p(lam) ** 2
    f = su.matrix[np.ix_(rows, cols)]
    labels = [codec.label(r) for r in rows]
    op = DenseOperator(f, row_labels=labels, col_labels=list(all_permutations(n)))
    return op, layout


def left_action(s, n: int) -> np.ndarray:
    """Permutation matrix of |t> -> |s t> on the group algebra."""
    size = math.factorial(n)
    m = np.zeros((size, size))
    for k, t in enumerate(all_permutations(n)):
        m[perm_index(compose(s, t)), k] = 1.0
    return m


def right_action(s, n: int) -> np.ndarray:
    """Permutation matrix of |t> -> |t s^-1> on the group algebra."""
    sinv = inverse(s)
    size = math.factorial(n)
    m = np.zeros((size, size))
    for k, t in enumerate(all_permutations(n)):
        m[perm_index(compose(t, sinv)), k] = 1.0
    return m


def _alignment_signs(f: np.ndarray, layout: FourierBlockLayout, n: int) -> dict:
    """Fixed per-row sign vector aligning each multiplicity register with
    Young's orthogonal representation, computed once from the left action of
    adjacent transpositions and then frozen."""
    signs = {}
    for lam, sl in layout.blocks:
        k = dim_p(lam)
        fix = np.zeros(k)
        fix[0] = 1.0
        # propagate relative signs through generators until all determined
        for _ in range(k):
            for g in range(1, n):
                s = transposition(n, g)
                blk = f[sl, :] @ left_action(s, n) @ f[sl, :].T
                q_hat = blk.reshape(k, k, k, k)
                y = young_orthogonal(lam, s)
                rep = np.einsum("apbp->ab", q_hat) / k
                for a in range(k):
                    for b in range(k):
                        if fix[b] and not fix[a] and abs(rep[a, b]) > 1e-8:
                            fix[a] = math.copysign(1.0, rep[a, b] * y[a, b] * fix[b])
            if all(fix):
                break
        signs[lam] = fix
    return signs


@dataclass
class FourierReport:
    n: int
    leakage: float
    block_residual: float
    pairs_checked: int


def verify_fourier(n: int, trials: int = 0, seed: int = 0) -> FourierReport:
    """Check that conjugating L(s1) R(s2) by the Fourier transform is block
    diagonal with blocks p_lam(s1) tensor p_lam(s2), after the one-time
    frozen sign alignment.  trials = 0 checks all pairs exhaustively."""
    f, layout = sn_qft_from_schur(n)
    signs = _alignment_signs(f.matrix, layout, n)
    perms = all_permutations(n)
    if trials:
        rng = np.random.default_rng(seed)
        pairs = [
            (perms[rng.integers(len(perms))], perms[rng.integers(len(perms))])
            for _ in range(trials)
        ]
    else:
        pairs = [(s1, s2) for s1 in perms for s2 in perms]
    leakage = 0.0
    residual = 0.0
    for s1, s2 in pairs:
        w = f.matrix @ left_action(s1, n) @ right_action(s2, n) @ f.matrix.T
        mask = np.ones(w.shape, dtype=bool)
        for lam, sl in layout.blocks:
            mask[sl, sl] = False
            k = dim_p(lam)
            d_fix = np.diag(signs[lam])
            expected = np.kron(
                d_fix @ young_orthogonal(lam, s1) @ d_fix, young_orthogonal(lam, s2)
            )
            residual = max(residual, float(np.abs(w[sl, sl] - expected).max()))
        leakage = max(leakage, float(np.abs(w[mask]).max()) if mask.any() else 0.0)
    return FourierReport(n=n, leakage=leakage, block_residual=residual, pairs_checked=len(pairs))


# ---------------------------------------------------------------------------
# generalized phase estimation


def _trivial_ancilla(n: int) -> np.ndarray:
    size = math.factorial(n)
    return np.full(size, 1.0 / math.sqrt(size))


def _controlled_permutation(d: int, n: int) -> np.ndarray:
    """sum_s |s><s| tensor P(s) on C[S_n] tensor (C^d)^n."""
    size = math.factorial(n)
    dim = d**n
    out = np.zeros((size * dim, size * dim))
    for k, s in enumerate(all_permutations(n)):
        out[k * dim : (k + 1) * dim, k * dim : (k + 1) * dim] = permutation_action(s, d)
    return out


@dataclass
class GPEResult:
    distribution: dict  # lam -> probability
    post_states: dict  # lam -> normalized post-measurement system state
    ancilla_fidelity: dict  # lam -> |<trivial|ancilla>|^2 after uncomputation


def gpe_measure(state, d: int, n: int) -> GPEResult:
    """Measure the partition label of a state using the group-algebra
    ancilla route: Fourier-conjugated controlled permutations, a label
    measurement on the ancilla, then uncomputation.

    The label distribution equals the isotypic projector masses and the
    post-measurement state is the normalized projection.
    """
    state = np.asarray(state, dtype=complex).reshape(-1)
    if state.shape[0] != d**n:
        raise ValueError("state length must be d^n")
    if d**n > dense_cap() or n**n > dense_cap():
        raise ValueError("instance too large")
    f, layout = sn_qft_from_schur(n)
    cp = _controlled_permutation(d, n)
    dim = d**n
    joint = cp @ np.kron(_trivial_ancilla(n), state)
    # Fourier transform on the ancilla register
    joint = joint.reshape(math.factorial(n), dim)
    joint = f.matrix @ joint
    result = GPEResult(distribution={}, post_states={}, ancilla_fidelity={})
    for lam, sl in layout.blocks:
        branch = np.zeros_like(joint)
        branch[sl, :] = joint[sl, :]
        prob = float((np.abs(branch) ** 2).sum())
        result.distribution[lam] = prob
        if prob < 1e-14:
            continue
        # uncompute: inverse Fourier, inverse controlled permutation
        back = (cp.T @ (f.matrix.T @ branch).reshape(-1)).reshape(
            math.factorial(n), dim
        )
        post = _trivial_ancilla(n) @ back  # component on the trivial ancilla
        norm = np.linalg.norm(post)
        result.post_states[lam] = post / norm if norm > 0 else post
        result.ancilla_fidelity[lam] = float(norm**2 / prob)
    return result


def gpe_instrument(ops: dict, state, d: int, n: int) -> dict:
    """Apply a label-indexed instrument {x: {lam: A_lam^x on P_lam}} through
    the ancilla route: after the controlled-permutation step the ancilla's
    permutation register carries the system's original P_lam amplitudes, so
    acting there effects A on the system.

    Returns x -> (probability, post-measurement system state).
    """
    state = np.asarray(state, dtype=complex).reshape(-1)
    if state.shape[0] != d**n:
        raise ValueError("state length must be d^n")
    f, layout = sn_qft_from_schur(n)
    # only sectors with at most d rows can occur on the system
    system_lams = [lam for lam, _ in layout.blocks if len(lam) <= d]
    for lam in system_lams:
        k = dim_p(lam)
        total = sum(
            np.asarray(fam[lam], dtype=complex).conj().T
            @ np.asarray(fam[lam], dtype=complex)
            for fam in ops.values()
        )
        if np.abs(total - np.eye(k)).max() > 1e-8:
            raise ValueError(f"instrument not normalized on sector {lam}")
    cp = _controlled_permutation(d, n)
    dim = d**n
    joint0 = (f.matrix @ (cp @ np.kron(_trivial_ancilla(n), state)).reshape(
        math.factorial(n), dim
    ))
    out = {}
    for x, fam in ops.items():
        moved = np.zeros_like(joint0)
        for lam, sl in layout.blocks:
            if lam not in fam:
                continue
            k = dim_p(lam)
            a = np.asarray(fam[lam], dtype=complex)
            blk = joint0[sl, :].reshape(k, k, dim)
            moved[sl, :] = np.einsum("qp,apx->aqx", a, blk).reshape(k * k, dim)
        back = (cp.T @ (f.matrix.T @ moved).reshape(-1)).reshape(
            math.factorial(n), dim
        )
        post = _trivial_ancilla(n) @ back
        prob = float(np.linalg.norm(post) ** 2)
        out[x] = (prob, post / math.sqrt(prob) if prob > 1e-14 else post)
    return out
