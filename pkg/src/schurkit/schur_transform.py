"""The Schur transform on n qudits, built by cascading Clebsch-Gordan
blocks, with an explicit label codec, Schur-basis measurement, an
independent character-theoretic projector oracle, and encode/decode into
the permutation-module (decoherence-free) sectors.
"""

from __future__ import annotations

import math
import os
from functools import lru_cache

import numpy as np

from .characters import character
from .combinatorics import (
    dim_p,
    dim_q,
    enumerate_gz,
    enumerate_partitions,
    normalize,
    partition_str,
    yy_index,
    yy_unindex,
)
from .operators import DenseOperator, permutation_action
from .permutations import all_permutations, cycle_type
from .wigner import cg_block, cg_output_blocks

DEFAULT_DENSE_CAP = 4096


def dense_cap() -> int:
    """The largest dense dimension d^n the package will materialize;
    overridable through the SCHURKIT_DENSE_CAP environment variable."""
    return int(os.environ.get("SCHURKIT_DENSE_CAP", DEFAULT_DENSE_CAP))


def _check_cap(dim: int) -> None:
    cap = dense_cap()
    if dim > cap:
        raise ValueError(
            f"dense dimension {dim} exceeds cap {cap}; "
            "raise SCHURKIT_DENSE_CAP to override"
        )


class SchurLabelCodec:
    """Deterministic ordering of (lam, q, p) triples onto output row indices.

    Rows are ordered by lam in enumerate_partitions(d, n) order, then by the
    GZ-pattern index q in [1, dim_q] (enumerate_gz order), then by the path
    index p in [1, dim_p] (yy_index order).  There are exactly d^n rows and
    every one carries support of the Schur unitary.
    """

    def __init__(self, d: int, n: int):
        self.d = d
        self.n = n
        self.triples = []
        self._offset = {}
        row = 0
        for lam in enumerate_partitions(d, n):
            self._offset[lam] = row
            nq, np_ = dim_q(lam, d), dim_p(lam)
            for qi in range(1, nq + 1):
                for pi in range(1, np_ + 1):
                    self.triples.append((lam, qi, pi))
            row += nq * np_

    def __len__(self):
        return len(self.triples)

    def index(self, lam, qi: int, pi: int) -> int:
        lam = normalize(lam)
        return self._offset[lam] + (qi - 1) * dim_p(lam) + (pi - 1)

    def label(self, row: int) -> tuple:
        return self.triples[row]

    def block_slice(self, lam) -> slice:
        """Row range of the lam sector (size dim_q * dim_p)."""
        lam = normalize(lam)
        start = self._offset[lam]
        return slice(start, start + dim_q(lam, self.d) * dim_p(lam))

    def row_strings(self) -> list:
        return [
            f"lam={partition_str(lam)} q={qi} p={pi}" for lam, qi, pi in self.triples
        ]

    def gz_pattern(self, lam, qi: int):
        return enumerate_gz(normalize(lam), self.d)[qi - 1]

    def yy_path(self, lam, pi: int):
        return yy_unindex(normalize(lam), pi)


@lru_cache(maxsize=None)
def _schur_pair(d: int, n: int):
    if d < 1 or n < 1:
        raise ValueError("need d >= 1 and n >= 1")
    _check_cap(d**n)
    codec = SchurLabelCodec(d, n)
    # per growing Young-Yamanouchi path, the map from the computational
    # basis of the first k qudits into the GZ basis of the path's top shape
    sectors = {((1,),): np.eye(d)}
    for k in range(1, n):
        grown = {}
        for path, amp in sectors.items():
            top = path[-1]
            block = cg_block(top, d)
            nq = dim_q(top, d)
            # multiply block @ kron(amp, I_d) without forming the kron:
            # column (x, i) of the product sums amp[q, x] over input (q, i)
            m3 = block.matrix.reshape(block.matrix.shape[0], nq, d)
            out = np.einsum("rqi,qx->rxi", m3, amp).reshape(
                block.matrix.shape[0], amp.shape[1] * d
            )
            for lp, rows in cg_output_blocks(top, d):
                grown[path + (lp,)] = out[rows, :]
        sectors = grown
    u = np.zeros((len(codec), d**n))
    for path, amp in sectors.items():
        lam = path[-1]
        pi = yy_index(path)
        for qi in range(1, dim_q(lam, d) + 1):
            u[codec.index(lam, qi, pi), :] = amp[qi - 1, :]
    op = DenseOperator(u, row_labels=codec.triples, col_labels=list(range(d**n)))
    return op, codec


def schur_unitary(d: int, n: int):
    """The Schur transform as a (d^n x d^n) DenseOperator mapping the
    computational basis onto labeled (lam, q, p) rows, plus its codec.

    The multiplicity record of the cascade (which row received a box at each
    step) is a Young-Yamanouchi path and is always compressed to the path
    index p via yy_index; yy_unindex recovers the raw record.
    """
    return _schur_pair(d, n)


def measure_schur(state, d: int, n: int, granularity: str = "lambda") -> dict:
    """Probability table of a Schur-basis measurement of a pure state.

    granularity: "lambda" keys by partition, "lambda_q" by (lam, q-index),
    "full" by (lam, q-index, p-index).  Probabilities sum to 1.
    """
    state = np.asarray(state, dtype=complex).reshape(-1)
    if state.shape[0] != d**n:
        raise ValueError("state length must be d^n")
    if abs(np.linalg.norm(state) - 1.0) > 1e-8:
        raise ValueError("state must be normalized")
    if granularity not in ("lambda", "lambda_q", "full"):
        raise ValueError(f"unknown granularity: {granularity}")
    u, codec = schur_unitary(d, n)
    amps = u.matrix @ state
    table = {}
    for row, p in enumerate(np.abs(amps) ** 2):
        lam, qi, pi = codec.label(row)
        if granularity == "lambda":
            key = lam
        elif granularity == "lambda_q":
            key = (lam, qi)
        else:
            key = (lam, qi, pi)
        table[key] = table.get(key, 0.0) + float(p)
    return table


def central_projector_oracle(lam, d: int, n: int) -> DenseOperator:
    """Isotypic projector onto the lam sector of (C^d)^n, built purely from
    symmetric-group characters and qudit-permutation matrices:

        (dim_p(lam) / n!) * sum_s chi_lam(cycle_type(s)) P(s)

    Independent of all Clebsch-Gordan machinery, so it serves as the
    verification oracle for the cascade.
    """
    lam = normalize(lam)
    _check_cap(d**n)
    dim = d**n
    acc = np.zeros((dim, dim))
    for s in all_permutations(n):
        chi = character(lam, cycle_type(s))
        if chi:
            acc += chi * permutation_action(s, d)
    acc *= dim_p(lam) / math.factorial(n)
    return DenseOperator(acc, row_labels=list(range(dim)), col_labels=list(range(dim)))


def dfs_encode(lam, q, p_state, d: int, n: int) -> np.ndarray:
    """Embed a state over the permutation module P_lam into (C^d)^n at a
    fixed unitary-register basis vector (GZ pattern q).

    q may be a GZ pattern (chain) or a 1-based index into enumerate_gz.
    """
    lam = normalize(lam)
    qi = q if isinstance(q, int) else enumerate_gz(lam, d).index(tuple(q)) + 1
    p_state = np.asarray(p_state, dtype=complex).reshape(-1)
    if p_state.shape[0] != dim_p(lam):
        raise ValueError("p_state length must be dim_p(lam)")
    u, codec = schur_unitary(d, n)
    rows = [codec.index(lam, qi, pi) for pi in range(1, dim_p(lam) + 1)]
    return u.matrix[rows, :].conj().T @ p_state


def dfs_decode(lam, q, state, d: int, n: int) -> np.ndarray:
    """Inverse of dfs_encode: project onto the (lam, q) rows and return the
    P_lam-register amplitudes."""
    lam = normalize(lam)
    qi = q if isinstance(q, int) else enumerate_gz(lam, d).index(tuple(q)) + 1
    state = np.asarray(state, dtype=complex).reshape(-1)
    u, codec = schur_unitary(d, n)
    rows = [codec.index(lam, qi, pi) for pi in range(1, dim_p(lam) + 1)]
    return u.matrix[rows, :] @ state
