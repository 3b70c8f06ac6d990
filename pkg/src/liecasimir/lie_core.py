"""Lie algebras over Q given by structure constants.

A :class:`LieAlgebra` stores only brackets ``[X_i, X_j]`` with ``i < j``; the
other half of the table is implied by antisymmetry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import linalg
from .scalar_poly import as_rational

__all__ = [
    "LieAlgebra",
    "BasisChange",
    "SingularBasisChange",
    "JacobiViolation",
    "bracket",
    "jacobi_check",
    "change_basis",
    "center",
    "adjoint_stack",
    "direct_sum",
    "derivation_dim",
]


class SingularBasisChange(ValueError):
    pass


def _freeze_brackets(dim, brackets):
    out = {}
    for key, terms in brackets.items():
        i, j = key
        if not (0 <= i < dim and 0 <= j < dim):
            raise ValueError(f"bracket index ({i}, {j}) out of range for dimension {dim}")
        sign = 1
        if i == j:
            if any(as_rational(c) for _, c in _iter_terms(terms)):
                raise ValueError(f"[X_{i}, X_{i}] must vanish")
            continue
        if i > j:
            i, j, sign = j, i, -1
        acc = dict(out.get((i, j), ()))
        for k, c in _iter_terms(terms):
            if not 0 <= k < dim:
                raise ValueError(f"output index {k} out of range for dimension {dim}")
            acc[k] = acc.get(k, 0) + sign * as_rational(c)
        acc = tuple(sorted((k, c) for k, c in acc.items() if c))
        if acc:
            out[(i, j)] = acc
        else:
            out.pop((i, j), None)
    return out


def _iter_terms(terms):
    if isinstance(terms, dict):
        return terms.items()
    return terms


@dataclass(frozen=True)
class LieAlgebra:
    """Structure constants C^k_ij over Q.

    ``brackets`` maps ``(i, j)`` with ``i < j`` to a sorted tuple of
    ``(k, coeff)`` pairs meaning ``[X_i, X_j] = sum coeff * X_k``.  The
    constructor accepts either orientation of a key, a dict or list of terms,
    and any exact rational coefficient; it normalizes everything.
    """

    dim: int
    brackets: dict = field(default_factory=dict)
    basis_labels: tuple = ()
    name: str = ""

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be non-negative")
        labels = tuple(self.basis_labels) or tuple(f"X{i + 1}" for i in range(self.dim))
        if len(labels) != self.dim:
            raise ValueError(f"{len(labels)} basis labels for dimension {self.dim}")
        object.__setattr__(self, "basis_labels", labels)
        object.__setattr__(self, "brackets", _freeze_brackets(self.dim, self.brackets))

    def structure_constant(self, i, j, k) -> Fraction:
        if i == j:
            return Fraction(0)
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        for kk, c in self.brackets.get((i, j), ()):
            if kk == k:
                return sign * c
        return Fraction(0)

    def bracket_of_basis(self, i, j):
        """[X_i, X_j] as a dense coefficient vector."""
        out = [Fraction(0)] * self.dim
        if i == j:
            return out
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        for k, c in self.brackets.get((i, j), ()):
            out[k] = sign * c
        return out

    def is_abelian(self):
        return not self.brackets

    def same_constants(self, other: "LieAlgebra") -> bool:
        """Equal dimension and identical structure constants (labels ignored)."""
        return self.dim == other.dim and self.brackets == other.brackets

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.brackets == other.brackets
            and self.basis_labels == other.basis_labels
        )

    def __hash__(self):
        return hash((self.dim, tuple(sorted(self.brackets.items())), self.basis_labels))

    def describe(self):
        names = self.basis_labels
        lines = []
        for (i, j), terms in sorted(self.brackets.items()):
            rhs = " + ".join(
                f"{c}*{names[k]}" if c != 1 else names[k] for k, c in terms
            ).replace("+ -", "- ")
            lines.append(f"[{names[i]}, {names[j]}] = {rhs}")
        return "\n".join(lines) if lines else "(abelian)"


@dataclass(frozen=True)
class BasisChange:
    """Invertible rational matrix; column i holds the new basis vector i in old coordinates."""

    matrix: tuple

    def __post_init__(self):
        rows = tuple(tuple(as_rational(x) for x in row) for row in self.matrix)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("basis change must be a square matrix")
        try:
            inv = linalg.inverse(rows) if n else []
        except ZeroDivisionError:
            raise SingularBasisChange("basis change matrix is singular") from None
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "_inverse", tuple(tuple(r) for r in inv))

    @property
    def n(self):
        return len(self.matrix)

    def inverse(self) -> "BasisChange":
        return BasisChange(self._inverse)

    @classmethod
    def identity(cls, n):
        return cls(linalg.identity(n))

    @classmethod
    def diagonal(cls, entries):
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def permutation(cls, perm):
        """New basis vector i is old basis vector perm[i]."""
        n = len(perm)
        return cls([[int(perm[j] == i) for j in range(n)] for i in range(n)])


def bracket(L: LieAlgebra, u, v):
    """[u, v] for coordinate vectors u, v."""
    if len(u) != L.dim or len(v) != L.dim:
        raise ValueError(f"vectors must have length {L.dim}")
    out = [Fraction(0)] * L.dim
    for (i, j), terms in L.brackets.items():
        w = u[i] * v[j] - u[j] * v[i]
        if w:
            for k, c in terms:
                out[k] += w * c
    return out


@dataclass(frozen=True)
class JacobiViolation:
    triple: tuple  # 0-based (i, j, k), i < j < k
    residual: tuple


def jacobi_check(L: LieAlgebra):
    """All basis triples violating the Jacobi identity; an empty list means pass."""
    n = L.dim
    basis = [[Fraction(int(a == b)) for b in range(n)] for a in range(n)]
    adj_cache = {}

    def br(i, j):
        key = (i, j)
        if key not in adj_cache:
            adj_cache[key] = L.bracket_of_basis(i, j)
        return adj_cache[key]

    violations = []
    for i, j, k in combinations(range(n), 3):
        total = [Fraction(0)] * n
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            inner = br(a, b)
            if any(inner):
                term = bracket(L, inner, basis[c])
                total = [x + y for x, y in zip(total, term)]
        if any(total):
            violations.append(JacobiViolation((i, j, k), tuple(total)))
    return violations


def change_basis(L: LieAlgebra, g: BasisChange) -> LieAlgebra:
    """Structure constants of (g . mu)(x, y) = g^{-1} mu(g x, g y)."""
    n = L.dim
    if g.n != n:
        raise ValueError(f"basis change of size {g.n} for dimension {n}")
    cols = [[g.matrix[r][c] for r in range(n)] for c in range(n)]
    ginv = g._inverse
    brackets = {}
    for i, j in combinations(range(n), 2):
        w = bracket(L, cols[i], cols[j])
        if not any(w):
            continue
        coords = [sum((ginv[k][c] * w[c] for c in range(n) if w[c]), Fraction(0)) for k in range(n)]
        terms = tuple((k, c) for k, c in enumerate(coords) if c)
        if terms:
            brackets[(i, j)] = terms
    return LieAlgebra(n, brackets, L.basis_labels, L.name)


def adjoint_stack(L: LieAlgebra):
    """The (n*n) x n matrix whose kernel is the center: rows indexed by (j, k)."""
    n = L.dim
    rows = []
    for j in range(n):
        for k in range(n):
            # coefficient of X_k in [v, X_j] = sum_i v_i C^k_ij
            rows.append([L.structure_constant(i, j, k) for i in range(n)])
    return rows


def center(L: LieAlgebra):
    """Basis of the center, via exact Gaussian elimination."""
    if L.dim == 0:
        return []
    return linalg.nullspace(adjoint_stack(L), L.dim)


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    shift = a.dim
    brackets = dict(a.brackets)
    for (i, j), terms in b.brackets.items():
        brackets[(i + shift, j + shift)] = tuple((k + shift, c) for k, c in terms)
    labels = tuple(f"{s}'" if s in a.basis_labels else s for s in b.basis_labels)
    name = f"{a.name}+{b.name}" if a.name and b.name else ""
    return LieAlgebra(a.dim + b.dim, brackets, a.basis_labels + labels, name)


def derivation_dim(L: LieAlgebra) -> int:
    """dim Der(L).  Strictly grows under a proper contraction; used to tell limits apart."""
    n = L.dim
    if n == 0:
        return 0
    # unknown D as n*n vector, D[a][b] = coefficient of X_a in D(X_b)
    idx = lambda a, b: a * n + b  # noqa: E731
    rows = []
    for i, j in combinations(range(n), 2):
        for k in range(n):
            # D[X_i, X_j] - [D X_i, X_j] - [X_i, D X_j], X_k component
            row = [Fraction(0)] * (n * n)
            for m, c in L.brackets.get((i, j), ()):
                row[idx(k, m)] += c
            for a in range(n):
                c1 = L.structure_constant(a, j, k)
                if c1:
                    row[idx(a, i)] -= c1
                c2 = L.structure_constant(i, a, k)
                if c2:
                    row[idx(a, j)] -= c2
            if any(row):
                rows.append(row)
    return n * n - linalg.rank(rows)
