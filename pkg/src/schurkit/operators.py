"""Dense operators with labeled bases, plus the basic collective actions on
(C^d)^n: qudit-permutation matrices and n-fold tensor powers."""

from __future__ import annotations

import numpy as np


class DenseOperator:
    """A dense matrix together with row/column basis labels.

    Labels are arbitrary hashable objects (partitions, GZ patterns, index
    tuples); ``row_index``/``col_index`` give O(1) lookup.  The matrix is a
    plain ndarray and is not copied.
    """

    def __init__(self, matrix, row_labels=None, col_labels=None):
        self.matrix = np.asarray(matrix)
        if self.matrix.ndim != 2:
            raise ValueError("matrix must be two-dimensional")
        r, c = self.matrix.shape
        self.row_labels = list(row_labels) if row_labels is not None else list(range(r))
        self.col_labels = list(col_labels) if col_labels is not None else list(range(c))
        if len(self.row_labels) != r or len(self.col_labels) != c:
            raise ValueError("label lengths must match matrix shape")
        self.row_index = {lab: i for i, lab in enumerate(self.row_labels)}
        self.col_index = {lab: i for i, lab in enumerate(self.col_labels)}

    @property
    def shape(self):
        return self.matrix.shape

    def __getitem__(self, key):
        row, col = key
        return self.matrix[self.row_index[row], self.col_index[col]]

    def dagger(self) -> "DenseOperator":
        return DenseOperator(self.matrix.conj().T, self.col_labels, self.row_labels)

    def unitarity_residual(self) -> float:
        """max |A†A - I|; 0 for an exact isometry (columns orthonormal)."""
        m = self.matrix
        g = m.conj().T @ m
        return float(np.abs(g - np.eye(g.shape[0])).max())

    def __repr__(self):
        return f"DenseOperator(shape={self.matrix.shape})"


def permutation_action(s, d: int) -> np.ndarray:
    """Matrix of the qudit-permutation P(s) on (C^d)^n, n = len(s).

    Convention: P(s)|i_1 ... i_n> = |i_{s^-1(1)} ... i_{s^-1(n)}>, i.e. the
    qudit at position k moves to position s(k).
    """
    dest = _image_indices(s, d)
    dim = d ** len(s)
    m = np.zeros((dim, dim))
    m[dest, np.arange(dim)] = 1.0
    return m


def _image_indices(s, d: int) -> np.ndarray:
    """dest[i] = index of P(s)|i> for every computational index i."""
    n = len(s)
    dim = d**n
    digits = np.empty((n, dim), dtype=np.intp)
    x = np.arange(dim)
    for k in range(n - 1, -1, -1):
        digits[k] = x % d
        x //= d
    # output digit at position s(k) is the input digit at position k
    dest = np.zeros(dim, dtype=np.intp)
    place = np.empty(n, dtype=np.intp)
    for k in range(n):
        place[s[k] - 1] = k
    for k in range(n):
        dest = dest * d + digits[place[k]]
    return dest


def permute_columns_like(matrix: np.ndarray, s, d: int) -> np.ndarray:
    """matrix @ permutation_action(s, d) without forming the permutation."""
    dim = d ** len(s)
    if matrix.shape[1] != dim:
        raise ValueError("column count must be d^n")
    return matrix[:, _image_indices(s, d)]


def collective_unitary(u: np.ndarray, n: int) -> np.ndarray:
    """U^{tensor n} acting identically on every qudit."""
    out = np.array([[1.0]])
    for _ in range(n):
        out = np.kron(out, u)
    return out


def right_multiply_collective(matrix: np.ndarray, u: np.ndarray, n: int) -> np.ndarray:
    """matrix @ u^{tensor n} by contracting one tensor factor at a time:
    n * dim^2 * d work instead of the dim^3 of a dense product."""
    d = u.shape[0]
    dim = d**n
    if matrix.shape[1] != dim:
        raise ValueError("column count must be d^n")
    rows = matrix.shape[0]
    t = matrix.reshape((rows,) + (d,) * n)
    for _ in range(n):
        # contract the current leading site; after n rounds the site axes
        # return to their original order
        t = np.tensordot(t, u, axes=([1], [0]))
    return t.reshape(rows, dim)


def real_complex_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """a @ b, splitting complex factors into real GEMMs when one side is
    real (roughly 2x faster than promoting the real side to complex)."""
    a_real = not np.iscomplexobj(a)
    b_real = not np.iscomplexobj(b)
    if a_real and b_real:
        return a @ b
    # .real/.imag of a complex array are strided views; copy to keep the
    # products on the contiguous GEMM fast path
    if a_real:
        return (a @ np.ascontiguousarray(b.real)) + 1j * (
            a @ np.ascontiguousarray(b.imag)
        )
    if b_real:
        return (np.ascontiguousarray(a.real) @ b) + 1j * (
            np.ascontiguousarray(a.imag) @ b
        )
    return a @ b
