"""Exact linear algebra over Q and fraction-free elimination over Q[x].

Matrices are plain lists of rows.  Everything here returns fresh lists and
never mutates its arguments.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

__all__ = [
    "rref",
    "rank",
    "nullspace",
    "inverse",
    "identity",
    "matmul",
    "bareiss_rank",
    "pfaffian",
]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a, b):
    cols = list(zip(*b)) if b else []
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]


def rref(matrix, ncols=None):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    m = [[Fraction(x) for x in row] for row in matrix]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        lead = m[r][c]
        if lead != 1:
            m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(matrix) -> int:
    """Rank over Q via forward elimination."""
    m = [list(row) for row in matrix if any(row)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pivot_row = m[r]
        lead = pivot_row[c]
        for i in range(r + 1, len(m)):
            if m[i][c]:
                f = Fraction(m[i][c]) / lead
                m[i] = [x - f * y for x, y in zip(m[i], pivot_row)]
        r += 1
        if r == len(m):
            break
    return r


def nullspace(matrix, ncols):
    """Basis of {v : matrix v = 0}, one vector per free column."""
    rows, pivots = rref(matrix, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(rows, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def inverse(matrix):
    """Inverse over Q; raises ZeroDivisionError when singular."""
    n = len(matrix)
    aug = [list(map(Fraction, row)) + idrow for row, idrow in zip(matrix, identity(n))]
    rows, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in rows]


def _pack_matrix(matrix):
    """Integer-coefficient packed form of a MultiPoly matrix.

    Each row is scaled by the lcm of its denominators (rank is unchanged).  A
    monomial becomes one int: total degree in the top field, then x_1 .. x_n,
    so monomial product is integer addition and int order is grlex order.
    """
    nv = next((e.num_vars for row in matrix for e in row), 0)
    max_deg = max((e.degree() for row in matrix for e in row), default=0)
    width = max(1, (max(1, max_deg) * max(1, min(len(matrix), len(matrix[0]) if matrix else 0))).bit_length() + 1)
    shifts = [width * (nv - 1 - v) for v in range(nv)]
    deg_shift = width * nv
    packed = []
    for row in matrix:
        lcm = 1
        for e in row:
            for c in e.terms.values():
                lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        prow = []
        for e in row:
            d = {}
            for exps, c in e.terms.items():
                key = sum(exps) << deg_shift
                for sh, p in zip(shifts, exps):
                    if p:
                        key |= p << sh
                d[key] = int(c * lcm)
            prow.append(d)
        packed.append(prow)
    return packed


def _pmul(a, b):
    out = {}
    get = out.get
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            v = get(k, 0) + ca * cb
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def _psub_into(a, b):
    # a - b, fresh dict
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) - c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _pdivexact(a, b, deg_shift, width, nv):
    if len(b) == 1:
        (kb, cb), = b.items()
        out = {}
        for k, c in a.items():
            q, r = divmod(c, cb)
            if r:
                raise ArithmeticError("division is not exact")
            out[k - kb] = q
        return out
    kb = max(b)
    cb = b[kb]
    rem = dict(a)
    quot = {}
    mask = (1 << width) - 1
    while rem:
        k = max(rem)
        qk = k - kb
        # every exponent field of the quotient monomial must be non-negative
        if qk < 0 or any(((k >> (width * i)) & mask) < ((kb >> (width * i)) & mask) for i in range(nv + 1)):
            raise ArithmeticError("division is not exact")
        qc, r = divmod(rem[k], cb)
        if r:
            raise ArithmeticError("division is not exact")
        quot[qk] = qc
        for kk, c in b.items():
            key = qk + kk
            v = rem.get(key, 0) - qc * c
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return quot


def bareiss_rank(matrix) -> int:
    """Rank over the fraction field of Q[x] by fraction-free Bareiss elimination.

    ``matrix`` is a list of MultiPoly rows.  After clearing denominators row
    by row the elimination runs in Z[x]; full pivoting picks the pivot with
    the fewest terms and every update divides exactly by the previous pivot.
    """
    nrows = len(matrix)
    if not nrows or not len(matrix[0]):
        return 0
    ncols = len(matrix[0])
    nv = next((e.num_vars for row in matrix for e in row), 0)
    m = _pack_matrix(matrix)
    max_deg = max((e.degree() for row in matrix for e in row), default=0)
    width = max(1, (max(1, max_deg) * max(1, min(nrows, ncols))).bit_length() + 1)
    deg_shift = width * nv
    prev = {0: 1}
    k = 0
    while k < min(nrows, ncols):
        best = None
        for i in range(k, nrows):
            for j in range(k, ncols):
                entry = m[i][j]
                if entry and (best is None or len(entry) < best[0]):
                    best = (len(entry), i, j)
        if best is None:
            break
        _, pi, pj = best
        m[k], m[pi] = m[pi], m[k]
        if pj != k:
            for row in m:
                row[k], row[pj] = row[pj], row[k]
        piv = m[k][k]
        row_k = m[k]
        for i in range(k + 1, nrows):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, ncols):
                val = _pmul(piv, row_i[j]) if row_i[j] else {}
                if lead and row_k[j]:
                    val = _psub_into(val, _pmul(lead, row_k[j]))
                row_i[j] = _pdivexact(val, prev, deg_shift, width, nv) if val else val
            row_i[k] = {}
        prev = piv
        k += 1
    return k


def pfaffian(matrix):
    """Pfaffian of an antisymmetric matrix, by expansion along the first row.

    Works for any entry type closed under +, -, *; intended for small
    symbolic matrices.
    """
    n = len(matrix)
    if n == 0:
        return 1
    if n % 2:
        return 0 * matrix[0][0] if n else 0
    idx = list(range(n))
    return _pf(matrix, idx)


def _pf(a, idx):
    if len(idx) == 2:
        return a[idx[0]][idx[1]]
    first = idx[0]
    rest = idx[1:]
    total = None
    for pos, j in enumerate(rest):
        entry = a[first][j]
        if not entry:
            continue
        sub = rest[:pos] + rest[pos + 1:]
        term = entry * _pf(a, sub)
        if pos % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return 0 * a[idx[0]][idx[1]]
    return total
