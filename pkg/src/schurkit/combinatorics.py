"""Exact integer combinatorics layer: partitions, interlacing chains, tableau
enumeration, dimension formulas, Kostka coefficients and Schur polynomials.

Conventions used throughout the package:

* A partition is a tuple of weakly decreasing nonnegative integers in
  canonical form, i.e. with trailing zeros trimmed.  The row-count context d
  is always supplied by callers; ``pad(lam, d)`` produces the padded view.
* The total order on partitions is descending lexicographic on the canonical
  form: (3,) comes before (2, 1), which comes before (1, 1, 1).  Index values
  produced by ``yy_index`` depend on this choice; only bijectivity is
  structural.
* A GZ pattern is a chain (q_1, ..., q_d) of canonical partitions with
  q_j of at most j rows, consecutive entries interlacing, q_d = lam.
* A YY path is a chain (p_1, ..., p_n) with p_1 = (1,), p_n = lam and each
  p_j obtained from p_{j+1} by removing one box (a standard tableau).

Everything here is pure and uses unbounded Python integers, so all dimension
formulas and index codecs are exact.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial


# ---------------------------------------------------------------------------
# partitions


def normalize(parts) -> tuple:
    """Canonical form: tuple with trailing zeros trimmed."""
    parts = tuple(int(x) for x in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(int(x) == x and x >= 0 for x in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def pad(lam, d: int) -> tuple:
    """View of lam with exactly d rows (trailing zeros added)."""
    lam = normalize(lam)
    if len(lam) > d:
        raise ValueError(f"partition {lam} has more than {d} rows")
    return lam + (0,) * (d - len(lam))


def size(lam) -> int:
    return sum(lam)


def partitions_precede(a, b) -> bool:
    """True if a comes strictly before b in the package's total order
    (descending lexicographic on canonical forms)."""
    return normalize(a) > normalize(b)


def enumerate_partitions(d: int, n: int) -> list:
    """All partitions of n into at most d parts, descending lexicographic."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(remaining, rows, maxpart):
        if remaining == 0:
            yield ()
            return
        if rows == 0:
            return
        # first part must leave a feasible remainder for the rows below it
        lo = -(-remaining // rows)  # ceil division
        for first in range(min(remaining, maxpart), lo - 1, -1):
            for rest in gen(remaining - first, rows - 1, first):
                yield (first,) + rest

    return [normalize(p) for p in gen(n, d, n)] if n > 0 else [()]


def interlaces(mu, lam) -> bool:
    """lam_1 >= mu_1 >= lam_2 >= mu_2 >= ... (mu sits between consecutive
    rows of lam; equivalently lam/mu removes at most one box per column)."""
    mu = normalize(mu)
    lam = normalize(lam)
    rows = max(len(lam), len(mu) + 1)
    lam = lam + (0,) * (rows - len(lam))
    mu = mu + (0,) * (rows - 1 - len(mu))
    for i in range(rows - 1):
        if not (lam[i] >= mu[i] >= lam[i + 1]):
            return False
    return True


def interlacing_partitions(lam, rows: int) -> list:
    """All mu with at most ``rows`` rows interlacing lam, descending
    lexicographic.  ``rows`` is normally (number of rows of lam's context)-1."""
    lam = pad(lam, rows + 1)

    def gen(i):
        if i == rows:
            yield ()
            return
        for v in range(lam[i], lam[i + 1] - 1, -1):
            for rest in gen(i + 1):
                yield (v,) + rest

    return [normalize(mu) for mu in gen(0)]


def add_box(lam, d: int) -> list:
    """All partitions of at most d rows obtained by adding one box to lam,
    ordered by the row index receiving the box."""
    lam = pad(lam, d)
    out = []
    for j in range(d):
        cand = lam[:j] + (lam[j] + 1,) + lam[j + 1:]
        if is_partition(cand):
            out.append(normalize(cand))
    return out


def remove_box(lam) -> list:
    """All partitions obtained by removing one box, ordered by row index."""
    lam = normalize(lam)
    out = []
    for j in range(len(lam)):
        cand = lam[:j] + (lam[j] - 1,) + lam[j + 1:]
        if is_partition(cand):
            out.append(normalize(cand))
    return out


# ---------------------------------------------------------------------------
# dimension formulas


def _shifted(lam, d: int) -> tuple:
    """lam + (d-1, d-2, ..., 1, 0), the strictly decreasing shifted rows."""
    lam = pad(lam, d)
    return tuple(lam[i] + (d - 1 - i) for i in range(d))


@lru_cache(maxsize=None)
def dim_q(lam, d: int) -> int:
    """Dimension of the unitary-group irrep labeled lam at rank d
    (number of GZ patterns; Weyl product over shifted row differences)."""
    lam = normalize(lam)
    lt = _shifted(lam, d)
    num = 1
    for i in range(d):
        for j in range(i + 1, d):
            num *= lt[i] - lt[j]
    den = 1
    for m in range(1, d):
        den *= factorial(m)
    q, r = divmod(num, den)
    assert r == 0
    return q


@lru_cache(maxsize=None)
def dim_p(lam) -> int:
    """Dimension of the symmetric-group irrep labeled lam
    (number of standard tableaux)."""
    lam = normalize(lam)
    if not lam:
        return 1
    d = len(lam)
    n = size(lam)
    lt = _shifted(lam, d)
    num = factorial(n)
    for i in range(d):
        for j in range(i + 1, d):
            num *= lt[i] - lt[j]
    den = 1
    for v in lt:
        den *= factorial(v)
    q, r = divmod(num, den)
    assert r == 0
    return q


def multinomial(n: int, weight) -> int:
    """n! / prod(weight_i!) by exact factored arithmetic."""
    if sum(weight) != n:
        raise ValueError("weight must sum to n")
    out = factorial(n)
    for w in weight:
        out //= factorial(w)
    return out


# ---------------------------------------------------------------------------
# GZ patterns and YY paths


@lru_cache(maxsize=None)
def enumerate_gz(lam, d: int) -> tuple:
    """All GZ patterns of shape lam at rank d, as chains (q_1, ..., q_d).

    Order: outermost by q_{d-1} descending lexicographic, then recursively;
    this is the order the Schur label codec uses.
    """
    lam = normalize(lam)
    if len(lam) > d:
        raise ValueError(f"partition {lam} has more than {d} rows")
    if d == 1:
        return ((lam,),)
    out = []
    for mu in interlacing_partitions(lam, d - 1):
        for sub in enumerate_gz(mu, d - 1):
            out.append(sub + (lam,))
    return tuple(out)


def gz_weight(pattern) -> tuple:
    """Weight of a GZ pattern: entry j is |q_j| - |q_{j-1}|."""
    sizes = [size(q) for q in pattern]
    return tuple(sizes[j] - (sizes[j - 1] if j else 0) for j in range(len(sizes)))


@lru_cache(maxsize=None)
def enumerate_yy(lam) -> tuple:
    """All YY paths of shape lam, as chains (p_1, ..., p_n).

    Ordered so that position in this list equals yy_index(path) - 1:
    grouped by p_{n-1} in descending lexicographic order, recursively.
    """
    lam = normalize(lam)
    n = size(lam)
    if n == 0:
        return ((),)
    if n == 1:
        return (((1,),),)
    out = []
    for mu in sorted(remove_box(lam), reverse=True):
        for sub in enumerate_yy(mu):
            out.append(sub + (lam,))
    return tuple(out)


def yy_index(path) -> int:
    """Rank of a YY path among all paths of its shape, in [1, dim_p].

    Ranking sums, for each level k from the top, the dimensions of the
    sibling shapes that precede p_{k-1} in the total order; the minimal
    path (always taking the earliest removable box) gets index 1.
    """
    path = tuple(normalize(p) for p in path)
    idx = 1
    for k in range(len(path) - 1, 0, -1):
        for mu in remove_box(path[k]):
            if partitions_precede(mu, path[k - 1]):
                idx += dim_p(mu)
    return idx


def yy_unindex(lam, k: int):
    """Inverse of yy_index: the YY path of shape lam with rank k."""
    lam = normalize(lam)
    if not 1 <= k <= dim_p(lam):
        raise ValueError(f"index {k} out of range for shape {lam}")
    k -= 1
    chain = [lam]
    cur = lam
    while size(cur) > 1:
        for mu in sorted(remove_box(cur), reverse=True):
            dm = dim_p(mu)
            if k < dm:
                chain.append(mu)
                cur = mu
                break
            k -= dm
    return tuple(reversed(chain))


# ---------------------------------------------------------------------------
# weights, Kostka coefficients, Schur polynomials


def weights_of_size(d: int, n: int) -> list:
    """All length-d tuples of nonnegative integers summing to n."""

    def gen(remaining, rows):
        if rows == 1:
            yield (remaining,)
            return
        for first in range(remaining, -1, -1):
            for rest in gen(remaining - first, rows - 1):
                yield (first,) + rest

    return list(gen(n, d))


@lru_cache(maxsize=None)
def kostka(lam, mu) -> int:
    """Number of GZ patterns of shape lam and weight mu (semistandard
    fillings of shape lam with content mu)."""
    lam = normalize(lam)
    mu = tuple(int(x) for x in mu)
    if size(lam) != sum(mu):
        raise ValueError("shape and weight must have the same size")
    d = len(mu)
    if len(lam) > d:
        return 0
    return sum(1 for pat in enumerate_gz(lam, d) if gz_weight(pat) == mu)


def schur_poly(lam, r):
    """Schur polynomial sum over GZ-pattern weights: sum_mu K_{lam,mu} r^mu.

    Exact when r entries are Fractions; d is len(r).  Evaluated by the
    branching recursion over interlacing partitions, so no pattern list is
    materialized.
    """
    r = tuple(r)
    if any(x < 0 for x in r):
        raise ValueError("r entries must be nonnegative")
    lam = normalize(lam)
    d = len(r)
    if len(lam) > d:
        raise ValueError(f"partition {lam} has more than {d} rows")
    memo = {}

    def rec(shape, depth):
        if depth == 1:
            return r[0] ** size(shape)
        key = (shape, depth)
        if key not in memo:
            memo[key] = sum(
                rec(mu, depth - 1) * r[depth - 1] ** (size(shape) - size(mu))
                for mu in interlacing_partitions(shape, depth - 1)
            )
        return memo[key]

    return rec(lam, d)


# ---------------------------------------------------------------------------
# serialization


def partition_str(lam) -> str:
    """Comma-joined rows; the empty partition prints as an empty string."""
    return ",".join(str(x) for x in normalize(lam))


def parse_partition(text: str) -> tuple:
    text = text.strip()
    lam = normalize(int(x) for x in text.split(",")) if text else ()
    if not is_partition(lam):
        raise ValueError(f"not a partition: {text!r}")
    return lam


def chain_str(chain) -> str:
    """Semicolon-joined partitions (GZ patterns and YY paths)."""
    return ";".join(partition_str(p) for p in chain)


def parse_chain(text: str) -> tuple:
    return tuple(parse_partition(p) for p in text.split(";")) if text else ()
