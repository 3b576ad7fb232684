"""Exact linear algebra: Fractions over Q, dense elimination over F_p,
Gaussian binomials and reduced-echelon subspace enumeration.

Everything here is deterministic and allocation-light; the F_p routines
sit inside the grassmannian point-counting hot loop.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, Sequence


# ---------------------------------------------------------------- rationals

def rank_fraction(rows: Sequence[Sequence]) -> int:
    """Rank of a matrix with int/Fraction entries, exact."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    col = 0
    while rank < len(m) and col < ncols:
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        col += 1
    return rank


def nullspace_fraction(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of the right kernel over Q."""
    if not rows:
        return []
    nrows, ncols = len(rows), len(rows[0])
    m = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(nrows):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
    basis = []
    free = [c for c in range(ncols) if c not in pivots]
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


def solve_fraction(a_rows: Sequence[Sequence], b_cols: Sequence[Sequence]) -> list[list[Fraction]]:
    """Solve A X = B exactly for square invertible A; B given column-wise.

    Returns X column-wise. Raises ValueError when A is singular.
    """
    n = len(a_rows)
    k = len(b_cols)
    m = [[Fraction(a_rows[r][c]) for c in range(n)] + [Fraction(b_cols[j][r]) for j in range(k)]
         for r in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [[m[r][n + j] for r in range(n)] for j in range(k)]


def classify_gram(s: Sequence[Sequence[int]]) -> str:
    """Classify a symmetric integer matrix: 'positive_definite',
    'positive_semidefinite' or 'indefinite'.

    Symmetric elimination; a zero diagonal pivot with a nonzero residual row
    is indefinite (the 2x2 principal minor is negative).
    """
    n = len(s)
    a = [[Fraction(s[i][j]) for j in range(n)] for i in range(n)]
    zero_pivots = 0
    for i in range(n):
        if a[i][i] < 0:
            return "indefinite"
        if a[i][i] == 0:
            if any(a[i][j] != 0 for j in range(i + 1, n)):
                return "indefinite"
            zero_pivots += 1
            continue
        # row elimination alone leaves the symmetric Schur complement
        for r in range(i + 1, n):
            if a[r][i] != 0:
                f = a[r][i] / a[i][i]
                for c in range(i, n):
                    a[r][c] -= f * a[i][c]
    return "positive_definite" if zero_pivots == 0 else "positive_semidefinite"


# ------------------------------------------------------------------- mod p

def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over F_p; rows are int sequences, not necessarily reduced."""
    m = [[x % p for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    col = 0
    while rank < len(m) and col < ncols:
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        row_r = m[rank]
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            if f:
                m[r] = [(a - f * b) % p for a, b in zip(m[r], row_r)]
        rank += 1
        col += 1
    return rank


def rref_mod_p(rows: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p; returns (nonzero rows, pivot columns)."""
    m = [[x % p for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
    return m[:rank], pivots


def gauss_binom(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n (Gaussian binomial)."""
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def iter_subspaces(m: int, k: int, p: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield every k-dimensional subspace of F_p^m exactly once, as the
    rows of its reduced echelon basis."""
    if k == 0:
        yield ()
        return
    for pivots in combinations(range(m), k):
        pivset = set(pivots)
        free_pos = [(i, j) for i in range(k) for j in range(pivots[i] + 1, m)
                    if j not in pivset]
        base = []
        for i in range(k):
            row = [0] * m
            row[pivots[i]] = 1
            base.append(row)
        if not free_pos:
            yield tuple(tuple(r) for r in base)
            continue
        for vals in product(range(p), repeat=len(free_pos)):
            rows = [list(r) for r in base]
            for (i, j), v in zip(free_pos, vals):
                rows[i][j] = v
            yield tuple(tuple(r) for r in rows)


def iter_superspaces(f_rows: Sequence[Sequence[int]], f_pivots: Sequence[int],
                     m: int, k: int, p: int) -> Iterator[list[tuple[int, ...]]]:
    """Yield spanning rows for each k-dimensional subspace of F_p^m that
    contains the span of `f_rows` (an RREF basis with pivot columns
    `f_pivots`), exactly once each."""
    f = len(f_rows)
    if k < f:
        return
    nonpiv = [j for j in range(m) if j not in set(f_pivots)]
    for w in iter_subspaces(len(nonpiv), k - f, p):
        rows = [tuple(r) for r in f_rows]
        for qrow in w:
            lift = [0] * m
            for pos, val in zip(nonpiv, qrow):
                lift[pos] = val
            rows.append(tuple(lift))
        yield rows
