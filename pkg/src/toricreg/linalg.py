"""Exact integer linear algebra: ranks over Q and F_p, determinants,
and gcds of maximal minors.

Everything works on Python ints (no float rounding, no overflow); the
Bareiss fraction-free elimination keeps intermediate entries as honest
subdeterminants.
"""

from __future__ import annotations

import itertools
from math import gcd
from typing import Iterable, Optional, Sequence

import numpy as np


def _to_rows(M) -> list[list[int]]:
    if isinstance(M, np.ndarray):
        return [[int(x) for x in row] for row in M]
    return [[int(x) for x in row] for row in M]


def bareiss_rank(M) -> int:
    """Rank over Q of an integer matrix, via fraction-free elimination."""
    rows = _to_rows(M)
    if not rows or not rows[0]:
        return 0
    m, n = len(rows), len(rows[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, m):
            f = rows[i][c]
            for j in range(c, n):
                rows[i][j] = (rows[i][j] * p - f * rows[r][j]) // prev
        prev = p
        r += 1
        rank += 1
        if r == m:
            break
    return rank


def bareiss_det(M) -> int:
    """Determinant of a square integer matrix (exact)."""
    rows = _to_rows(M)
    n = len(rows)
    if n == 0:
        return 1
    assert all(len(row) == n for row in rows)
    sign = 1
    prev = 1
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            sign = -sign
        p = rows[c][c]
        for i in range(c + 1, n):
            f = rows[i][c]
            for j in range(c, n):
                rows[i][j] = (rows[i][j] * p - f * rows[c][j]) // prev
        prev = p
    return sign * rows[n - 1][n - 1]


def rank_mod_p(M, p: int) -> int:
    """Rank of an integer matrix over the prime field F_p."""
    rows = [[x % p for x in row] for row in _to_rows(M)]
    if not rows or not rows[0]:
        return 0
    m, n = len(rows), len(rows[0])
    rank = 0
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        r += 1
        rank += 1
        if r == m:
            break
    return rank


def gcd_of_maximal_minors(M, early_exit: Optional[int] = None) -> int:
    """gcd of all k x k minors of a k x n integer matrix (k <= n).

    Column subsets are visited in lexicographic order, so putting
    well-chosen columns first keeps the running gcd small early.  When
    ``early_exit`` is given and the running gcd reaches it (a proven
    lower bound), the scan stops.
    """
    rows = _to_rows(M)
    k = len(rows)
    n = len(rows[0]) if rows else 0
    assert k <= n
    g = 0
    for cols in itertools.combinations(range(n), k):
        sub = [[row[c] for c in cols] for row in rows]
        g = gcd(g, bareiss_det(sub))
        if g == 1 or (early_exit is not None and g == early_exit):
            break
    return g
