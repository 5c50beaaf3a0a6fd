"""
Exact integer matrix helpers over ℤ/p^N.

Matrices are lists of rows of Python ints. Determinants, adjugates,
characteristic polynomials and modular inverses are delegated to
:class:`sympy.Matrix`, which works over ℤ with exact big integers; the
results are then reduced modulo the requested power of p.
"""

from typing import List, Optional, Sequence

import sympy

Matrix = List[List[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def reduce(A: Sequence[Sequence[int]], m: int) -> Matrix:
    return [[x % m for x in row] for row in A]


def scale(A: Sequence[Sequence[int]], c: int, m: Optional[int] = None) -> Matrix:
    out = [[c * x for x in row] for row in A]
    return reduce(out, m) if m else out


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], m: Optional[int] = None) -> Matrix:
    cols = list(zip(*B))
    out = [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in A]
    return reduce(out, m) if m else out


def matvec(A: Sequence[Sequence[int]], v: Sequence[int], m: Optional[int] = None) -> List[int]:
    out = [sum(a * x for a, x in zip(row, v)) for row in A]
    return [x % m for x in out] if m else out


def transpose(A: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*A)]


def determinant(A: Sequence[Sequence[int]]) -> int:
    return int(sympy.Matrix(A).det(method="bareiss"))


def adjugate(A: Sequence[Sequence[int]]) -> Matrix:
    adj = sympy.Matrix(A).adjugate()
    return [[int(adj[i, j]) for j in range(adj.cols)] for i in range(adj.rows)]


def charpoly(A: Sequence[Sequence[int]], m: Optional[int] = None) -> List[int]:
    """Characteristic polynomial det(T·I − A), coefficients low-to-high."""
    T = sympy.Symbol("T")
    coeffs = [int(c) for c in reversed(sympy.Matrix(A).charpoly(T).all_coeffs())]
    return [c % m for c in coeffs] if m else coeffs


def inverse_mod(A: Sequence[Sequence[int]], m: int) -> Matrix:
    """Inverse of *A* modulo *m*; *A* must be invertible mod every prime factor of m."""
    inv = sympy.Matrix(A).inv_mod(m)
    return [[int(inv[i, j]) % m for j in range(inv.cols)] for i in range(inv.rows)]


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over 𝔽_p by Gaussian elimination."""
    work = [[x % p for x in row] for row in rows]
    if not work:
        return 0
    n_cols = len(work[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = pow(work[rank][col], -1, p)
        work[rank] = [(x * inv) % p for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                c = work[r][col]
                work[r] = [(x - c * y) % p for x, y in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def lattice_valuation(basis: Sequence[Sequence[int]], vector: Sequence[int], p: int, N: int) -> Optional[int]:
    """Largest n ≤ N with *vector* ∈ p^n·L, where L is spanned by the columns of *basis*.

    *basis* must be invertible mod p (a ℤ_p-basis of the ambient lattice).
    Returns ``None`` when the vector lies in p^N·L, i.e. is zero at precision N.
    """
    m = p ** N
    coords = matvec(inverse_mod(basis, m), vector, m)
    best = None
    for c in coords:
        if c:
            v = 0
            while c % p == 0:
                c //= p
                v += 1
            best = v if best is None else min(best, v)
    return best
