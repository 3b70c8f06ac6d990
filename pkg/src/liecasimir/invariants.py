"""Counting and finding generalized Casimir invariants.

The number of functionally independent invariants of the coadjoint
representation is ``n - r``, with ``r`` the generic rank of the commutator
matrix ``M_ij(x) = sum_k C^k_ij x_k``.  The rank is estimated by evaluating
``M`` at random integer points and, optionally, certified by fraction-free
elimination over ``Q[x]``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .lie_core import LieAlgebra, center
from .scalar_poly import MultiPoly, monomials_of_degree

__all__ = [
    "CommutatorMatrix",
    "InvariantReport",
    "build_commutator_matrix",
    "generic_rank",
    "sampled_rank",
    "symbolic_rank",
    "invariant_count",
    "polynomial_invariants",
    "pde_residuals",
    "functional_independence_check",
    "DEFAULT_TRIALS",
    "DEFAULT_BOUND",
    "DEFAULT_SEED",
    "CERTIFY_MAX_DIM",
]

DEFAULT_TRIALS = 5
DEFAULT_BOUND = 10**6
DEFAULT_SEED = 0
CERTIFY_MAX_DIM = 8


@dataclass(frozen=True)
class CommutatorMatrix:
    n: int
    entries: tuple  # n rows of n MultiPoly

    def evaluate(self, point):
        return [[e.evaluate(point) if e else Fraction(0) for e in row] for row in self.entries]

    def linear_evaluate(self, point):
        # entries are linear forms, so evaluation is a dot product with the coefficients
        n = self.n
        out = []
        for row in self.entries:
            vals = []
            for e in row:
                v = Fraction(0)
                for exps, c in e.terms.items():
                    v += c * point[exps.index(1)]
                vals.append(v)
            out.append(vals)
        return out if n else []

    def is_antisymmetric(self):
        n = self.n
        return all(
            (self.entries[i][j] + self.entries[j][i]).is_zero()
            for i in range(n)
            for j in range(i, n)
        )

    def to_strings(self, names=None):
        return [[e.to_string(names) for e in row] for row in self.entries]


def build_commutator_matrix(L: LieAlgebra) -> CommutatorMatrix:
    n = L.dim
    zero = MultiPoly.zero(n)
    rows = [[zero] * n for _ in range(n)]
    for (i, j), terms in L.brackets.items():
        coeffs = [Fraction(0)] * n
        for k, c in terms:
            coeffs[k] = c
        form = MultiPoly.linear(coeffs)
        rows[i][j] = form
        rows[j][i] = -form
    return CommutatorMatrix(n, tuple(tuple(r) for r in rows))


def sampled_rank(M: CommutatorMatrix, trials=DEFAULT_TRIALS, bound=DEFAULT_BOUND, rng=None) -> int:
    """Max rank of M(p) over ``trials`` random integer points in [-bound, bound]^n."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if bound < 2:
        raise ValueError("bound must be at least 2")
    if rng is None:
        rng = random.Random(DEFAULT_SEED)
    n = M.n
    if n == 0 or all(not e for row in M.entries for e in row):
        return 0
    ceiling = n - (n % 2)
    best = 0
    for _ in range(trials):
        point = [rng.randint(-bound, bound) for _ in range(n)]
        best = max(best, linalg.rank(M.linear_evaluate(point)))
        if best == ceiling:
            break
    return best


def symbolic_rank(M: CommutatorMatrix) -> int:
    """Rank over Q(x_1..x_n) by Bareiss elimination on the polynomial matrix."""
    if M.n == 0:
        return 0
    return linalg.bareiss_rank(M.entries)


def _certify(M: CommutatorMatrix, sampled: int) -> int:
    # The rank at a rational point is an exact lower bound on the generic rank,
    # so a sample reaching the antisymmetric ceiling n - (n mod 2) needs no elimination.
    if sampled == M.n - (M.n % 2):
        return sampled
    s = symbolic_rank(M)
    if s < sampled:
        raise ArithmeticError(f"sampled rank {sampled} exceeds symbolic rank {s}")
    return s


def generic_rank(M: CommutatorMatrix, trials=DEFAULT_TRIALS, bound=DEFAULT_BOUND, certify=False, rng=None):
    """Return (rank, certified).

    Sampling can only under-estimate the generic rank; when ``certify`` is set
    the symbolic rank is returned instead and must dominate the sample.
    """
    r = sampled_rank(M, trials, bound, rng)
    certified = False
    if certify:
        r = _certify(M, r)
        certified = True
    if r % 2:
        raise ArithmeticError(f"odd rank {r} for an antisymmetric matrix")
    return r, certified


@dataclass
class InvariantReport:
    dim: int
    generic_rank: int
    invariant_count: int
    rank_certified: bool
    sampled_rank: int
    center_dim: int
    sample_trials: int
    sample_bound: int
    polynomial_invariants: list = field(default=None)

    def check(self):
        r, n = self.generic_rank, self.dim
        assert r % 2 == 0 and 0 <= r <= n
        assert self.invariant_count == n - r
        assert self.invariant_count >= self.center_dim
        assert self.invariant_count % 2 == n % 2
        return self


def invariant_count(
    L: LieAlgebra,
    trials=DEFAULT_TRIALS,
    bound=DEFAULT_BOUND,
    certify=None,
    seed=DEFAULT_SEED,
    max_degree=None,
) -> InvariantReport:
    """Number of functionally independent coadjoint invariants, N = dim - generic rank.

    ``certify=None`` means certify when ``dim <= CERTIFY_MAX_DIM``.
    ``max_degree`` additionally attaches the polynomial invariants up to that degree.
    """
    if certify is None:
        certify = L.dim <= CERTIFY_MAX_DIM
    M = build_commutator_matrix(L)
    rng = random.Random(seed)
    sampled = sampled_rank(M, trials, bound, rng)
    r, certified = sampled, False
    if certify:
        r = _certify(M, sampled)
        certified = True
    report = InvariantReport(
        dim=L.dim,
        generic_rank=r,
        invariant_count=L.dim - r,
        rank_certified=certified,
        sampled_rank=sampled,
        center_dim=len(center(L)),
        sample_trials=trials,
        sample_bound=bound,
    )
    if max_degree is not None:
        report.polynomial_invariants = polynomial_invariants(L, max_degree)
    return report.check()


def _operators(L: LieAlgebra):
    """For each i, the list of (j, linear form M_ij) with M_ij nonzero."""
    M = build_commutator_matrix(L)
    return [[(j, e) for j, e in enumerate(row) if e] for row in M.entries]


def pde_residuals(L: LieAlgebra, F: MultiPoly):
    """The polynomials sum_j M_ij(x) dF/dx_j, one per i."""
    n = L.dim
    out = []
    grads = [F.diff(j) for j in range(n)]
    for ops in _operators(L):
        acc = MultiPoly.zero(n)
        for j, form in ops:
            if grads[j]:
                acc = acc + form * grads[j]
        out.append(acc)
    return out


def polynomial_invariants(L: LieAlgebra, max_degree: int):
    """Basis of polynomial invariants of degree 1..max_degree without constant term.

    The operators preserve degree, so each homogeneous degree is solved on
    its own.  Within a degree the basis is in reduced row echelon form with
    monomials ordered grlex-descending and leading coefficient 1; degrees
    are listed in increasing order.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    n = L.dim
    ops = _operators(L)
    result = []
    for d in range(1, max_degree + 1):
        monos = monomials_of_degree(n, d)
        if not monos:
            continue
        # each unknown monomial m contributes sum_j M_ij * dm/dx_j to equation block i
        col_images = []
        for m in monos:
            mono = MultiPoly(n, {m: 1})
            images = []
            for i, row_ops in enumerate(ops):
                for j, form in row_ops:
                    if m[j]:
                        for exps, c in (form * mono.diff(j)).terms.items():
                            images.append(((i, exps), c))
            col_images.append(images)
        row_index = {}
        for images in col_images:
            for key, _ in images:
                row_index.setdefault(key, len(row_index))
        system = [[Fraction(0)] * len(monos) for _ in range(len(row_index))]
        for col, images in enumerate(col_images):
            for key, c in images:
                system[row_index[key]][col] += c
        kernel = linalg.nullspace(system, len(monos)) if system else [
            [Fraction(int(a == b)) for b in range(len(monos))] for a in range(len(monos))
        ]
        if not kernel:
            continue
        basis, _ = linalg.rref(kernel, len(monos))
        for vec in basis:
            result.append(MultiPoly(n, {m: c for m, c in zip(monos, vec) if c}))
    return result


def functional_independence_check(fs, trials=DEFAULT_TRIALS, bound=DEFAULT_BOUND, seed=DEFAULT_SEED) -> int:
    """Max Jacobian rank of ``fs`` over random integer points: a lower bound on independence."""
    fs = list(fs)
    if not fs:
        return 0
    n = fs[0].num_vars
    if any(f.num_vars != n for f in fs):
        raise ValueError("all polynomials must share the variable count")
    jac = [[f.diff(j) for j in range(n)] for f in fs]
    rng = random.Random(seed)
    best = 0
    for _ in range(trials):
        point = [Fraction(rng.randint(-bound, bound)) for _ in range(n)]
        best = max(best, linalg.rank([[g.evaluate(point) for g in row] for row in jac]))
        if best == min(len(fs), n):
            break
    return best
