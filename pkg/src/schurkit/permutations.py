"""Symmetric-group elements in one-line notation.

A permutation s of [n] is a tuple (s(1), ..., s(n)) of the values 1..n.
``all_permutations(n)`` enumerates them in lexicographic one-line order;
that enumeration fixes the index <-> permutation bijection used by the
group-algebra register everywhere in the package.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def identity(n: int) -> tuple:
    return tuple(range(1, n + 1))


def compose(s, t) -> tuple:
    """(s o t)(i) = s(t(i))."""
    return tuple(s[t[i] - 1] for i in range(len(t)))


def inverse(s) -> tuple:
    out = [0] * len(s)
    for i, v in enumerate(s):
        out[v - 1] = i + 1
    return tuple(out)


def sign(s) -> int:
    seen = [False] * len(s)
    sgn = 1
    for i in range(len(s)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = s[j] - 1
            length += 1
        if length % 2 == 0:
            sgn = -sgn
    return sgn


def cycle_type(s) -> tuple:
    """Cycle lengths sorted decreasing (a partition of n)."""
    seen = [False] * len(s)
    lengths = []
    for i in range(len(s)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = s[j] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def transposition(n: int, k: int) -> tuple:
    """The adjacent transposition (k, k+1) in S_n, 1 <= k <= n-1."""
    s = list(range(1, n + 1))
    s[k - 1], s[k] = s[k], s[k - 1]
    return tuple(s)


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple:
    """All of S_n in lexicographic one-line order."""
    return tuple(itertools.permutations(range(1, n + 1)))


def perm_index(s) -> int:
    """Position of s in all_permutations(len(s)) without building the list:
    the factorial number system rank of the one-line word."""
    n = len(s)
    remaining = list(range(1, n + 1))
    idx = 0
    fact = 1
    for i in range(2, n):
        fact *= i
    for i in range(n - 1):
        pos = remaining.index(s[i])
        idx += pos * fact
        remaining.pop(pos)
        if n - 2 - i > 0:
            fact //= n - 1 - i
    return idx


def conjugacy_classes(n: int) -> dict:
    """Map cycle type -> class size: n! / (prod_k k^{m_k} m_k!) where m_k is
    the number of k-cycles."""
    from math import factorial

    from .combinatorics import enumerate_partitions

    out = {}
    for t in enumerate_partitions(n, n):
        z = 1
        for k in set(t):
            m = t.count(k)
            z *= k**m * factorial(m)
        out[t] = factorial(n) // z
    return out
