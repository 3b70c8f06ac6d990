"""Independent reference computations used to check the library.

None of these share code paths with the routines they check: rank comes
from principal Pfaffians rather than elimination, determinants from the
Leibniz expansion, transformed structure constants from a dense triple sum.
"""

from fractions import Fraction
from itertools import combinations, permutations

from liecasimir.linalg import pfaffian


def perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def leibniz_det(a):
    n = len(a)
    total = 0
    for p in permutations(range(n)):
        term = perm_sign(p)
        for i in range(n):
            term = term * a[i][p[i]]
            if not term:
                break
        total = total + term
    return total


def principal_pfaffian_rank(entries):
    """Generic rank of an antisymmetric polynomial matrix.

    The rank of an antisymmetric matrix equals the largest size of a
    nonsingular principal submatrix, and a principal minor is the square of
    the principal Pfaffian.
    """
    n = len(entries)
    for k in range(n - n % 2, 0, -2):
        for idx in combinations(range(n), k):
            sub = [[entries[i][j] for j in idx] for i in idx]
            if pfaffian(sub):
                return k
    return 0


def dense_structure_constants(L):
    n = L.dim
    return [[[L.structure_constant(i, j, k) for k in range(n)] for j in range(n)] for i in range(n)]


def transform_constants(L, g, ginv):
    """C'^k_ij = sum_{a,b,c} g[a][i] g[b][j] C^c_ab ginv[k][c], done the long way."""
    n = L.dim
    C = dense_structure_constants(L)
    out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                s = Fraction(0)
                for a in range(n):
                    for b in range(n):
                        gab = g[a][i] * g[b][j]
                        if not gab:
                            continue
                        for c in range(n):
                            if C[a][b][c] and ginv[k][c]:
                                s += gab * C[a][b][c] * ginv[k][c]
                out[i][j][k] = s
    return out


def jacobi_residual_dense(C, i, j, k):
    """Cyclic Jacobi sum on basis vectors from the dense constant table."""
    n = len(C)
    res = [Fraction(0)] * n
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        for m in range(n):
            if C[a][b][m]:
                for t in range(n):
                    res[t] += C[a][b][m] * C[m][c][t]
    return res
