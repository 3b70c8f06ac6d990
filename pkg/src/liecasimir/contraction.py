"""One-parameter contraction families and their limits.

A family ``g(e)`` is an invertible matrix over Q(e).  Transforming the
structure constants by ``g(e)`` gives constants ``C^k_ij(e)`` in Q(e); the
contracted algebra keeps their values at ``e -> 0``.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .invariants import (
    DEFAULT_BOUND,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    build_commutator_matrix,
    generic_rank,
    invariant_count,
)
from .lie_core import LieAlgebra, jacobi_check
from .scalar_poly import (
    DIVERGENT,
    RationalFunction,
    SingularFamily,
    as_rational,
    ratfunc_limit_at_zero,
    ratfunc_matrix_inverse,
)

__all__ = [
    "ContractionFamily",
    "EpsilonStructure",
    "DivergentLimit",
    "SingularFamily",
    "apply_family",
    "contract_limit",
    "semicontinuity_check",
    "SemicontinuityReport",
    "verify_monotonicity",
    "MonotonicityReport",
    "Verdict",
    "contraction_necessary_condition",
    "DEFAULT_EPS_SAMPLES",
]

DEFAULT_EPS_SAMPLES = (Fraction(1, 2), Fraction(1, 3), Fraction(1, 7), Fraction(1, 101))


class DivergentLimit(ArithmeticError):
    """Some C^k_ij(e) has a pole at e = 0.  ``where`` holds 0-based (i, j, k)."""

    def __init__(self, where, value=None):
        self.where = tuple(where)
        self.value = value
        i, j, k = self.where
        super().__init__(
            f"structure constant C^{k + 1}_{i + 1},{j + 1}(e) = {value} diverges at e = 0"
        )


@dataclass(frozen=True)
class ContractionFamily:
    """Matrix g(e) over Q(e); column i is the new basis vector Y_i in old coordinates."""

    n: int
    matrix: tuple
    weights: tuple = None

    def __post_init__(self):
        rows = tuple(tuple(RationalFunction.coerce(x) for x in row) for row in self.matrix)
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ValueError(f"family matrix must be {self.n} x {self.n}")
        object.__setattr__(self, "matrix", rows)
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
            object.__setattr__(self, "_inverse", None)
        else:
            # raises SingularFamily when det g(e) vanishes identically
            inv = ratfunc_matrix_inverse(rows) if self.n else []
            object.__setattr__(self, "_inverse", tuple(tuple(r) for r in inv))

    @classmethod
    def diagonal(cls, weights):
        """g(e) = diag(e^a_1, ..., e^a_n), integer exponents."""
        ws = []
        for w in weights:
            if isinstance(w, bool) or int(w) != w:
                raise ValueError(f"weights must be integers, got {w!r}")
            ws.append(int(w))
        n = len(ws)
        matrix = [
            [RationalFunction.eps_power(ws[i]) if i == j else RationalFunction(0) for j in range(n)]
            for i in range(n)
        ]
        return cls(n, matrix, tuple(ws))

    @classmethod
    def from_matrix(cls, entries):
        return cls(len(entries), entries)

    @classmethod
    def identity(cls, n):
        return cls.diagonal([0] * n)

    def inverse_matrix(self):
        if self.weights is not None:
            n = self.n
            return [
                [RationalFunction.eps_power(-self.weights[i]) if i == j else RationalFunction(0)
                 for j in range(n)]
                for i in range(n)
            ]
        return [list(r) for r in self._inverse]


@dataclass(frozen=True)
class EpsilonStructure:
    """Structure constants C^k_ij(e) over Q(e), keys (i, j) with i < j."""

    n: int
    brackets: dict
    basis_labels: tuple = ()

    def constant(self, i, j, k) -> RationalFunction:
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        for kk, f in self.brackets.get((i, j), ()):
            if kk == k:
                return f if sign == 1 else -f
        return RationalFunction(0)

    def evaluate(self, eps0):
        """The rational algebra at e = eps0, or None if eps0 is a pole of some entry."""
        eps0 = as_rational(eps0)
        out = {}
        for key, terms in self.brackets.items():
            vals = []
            for k, f in terms:
                v = f.evaluate(eps0)
                if v is None:
                    return None
                vals.append((k, v))
            out[key] = vals
        return LieAlgebra(self.n, out, self.basis_labels)


def apply_family(L0: LieAlgebra, g: ContractionFamily) -> EpsilonStructure:
    """C^k_ij(e) for the transformed law g(e)^-1 mu(g(e) x, g(e) y)."""
    n = L0.dim
    if g.n != n:
        raise ValueError(f"family of size {g.n} for an algebra of dimension {n}")
    brackets = {}
    if g.weights is not None:
        w = g.weights
        for (i, j), terms in L0.brackets.items():
            brackets[(i, j)] = tuple(
                (k, RationalFunction.eps_power(w[i] + w[j] - w[k], c)) for k, c in terms
            )
        return EpsilonStructure(n, brackets, L0.basis_labels)

    cols = [[g.matrix[r][c] for r in range(n)] for c in range(n)]
    ginv = g.inverse_matrix()
    zero = RationalFunction(0)
    for i, j in combinations(range(n), 2):
        # mu(g e_i, g e_j) in old coordinates
        w = [zero] * n
        u, v = cols[i], cols[j]
        for (a, b), terms in L0.brackets.items():
            coef = u[a] * v[b] - u[b] * v[a]
            if coef:
                for k, c in terms:
                    w[k] = w[k] + coef * c
        if not any(w):
            continue
        terms = []
        for k in range(n):
            acc = zero
            for c in range(n):
                if w[c] and ginv[k][c]:
                    acc = acc + ginv[k][c] * w[c]
            if acc:
                terms.append((k, acc))
        if terms:
            brackets[(i, j)] = tuple(terms)
    return EpsilonStructure(n, brackets, L0.basis_labels)


def contract_limit(c_eps: EpsilonStructure) -> LieAlgebra:
    """The limit algebra at e -> 0; raises DivergentLimit on a pole."""
    out = {}
    for (i, j), terms in sorted(c_eps.brackets.items()):
        vals = []
        for k, f in terms:
            lim = ratfunc_limit_at_zero(f)
            if lim is DIVERGENT:
                raise DivergentLimit((i, j, k), f)
            if lim:
                vals.append((k, lim))
        if vals:
            out[(i, j)] = vals
    limit = LieAlgebra(c_eps.n, out, c_eps.basis_labels)
    bad = jacobi_check(limit)
    if bad:
        raise ArithmeticError(f"limit algebra violates Jacobi at {bad[0].triple}")
    return limit


@dataclass
class SemicontinuitySample:
    eps: Fraction
    rank_at_eps: int = None
    rank_limit: int = None
    holds: bool = None
    note: str = ""


@dataclass
class SemicontinuityReport:
    rank_limit: int
    samples: list = field(default_factory=list)

    @property
    def holds(self):
        return all(s.holds for s in self.samples if s.holds is not None)

    def ranks_at_eps(self):
        return [s.rank_at_eps for s in self.samples if s.rank_at_eps is not None]


def _rank(L, trials, bound, certify, seed):
    return generic_rank(
        build_commutator_matrix(L), trials, bound, certify, random.Random(seed)
    )[0]


def semicontinuity_check(
    c_eps: EpsilonStructure,
    L1: LieAlgebra,
    sample_eps=DEFAULT_EPS_SAMPLES,
    trials=DEFAULT_TRIALS,
    bound=DEFAULT_BOUND,
    certify=True,
    seed=DEFAULT_SEED,
) -> SemicontinuityReport:
    """Compare the generic rank at each nonzero e0 with the rank of the limit."""
    r1 = _rank(L1, trials, bound, certify, seed)
    report = SemicontinuityReport(rank_limit=r1)
    for eps0 in sample_eps:
        eps0 = as_rational(eps0)
        sample = SemicontinuitySample(eps0, rank_limit=r1)
        if not eps0:
            sample.note = "skipped: e0 = 0 is the limit itself"
        else:
            L = c_eps.evaluate(eps0)
            if L is None:
                sample.note = "skipped: pole of some structure constant"
            else:
                sample.rank_at_eps = _rank(L, trials, bound, certify, seed)
                sample.holds = sample.rank_at_eps >= r1
        report.samples.append(sample)
    return report


@dataclass
class MonotonicityReport:
    n0: int
    n1: int
    rank0: int
    rank1: int
    certified: bool

    @property
    def holds(self):
        return self.n1 >= self.n0


def verify_monotonicity(L0: LieAlgebra, L1: LieAlgebra, trials=DEFAULT_TRIALS,
                        bound=DEFAULT_BOUND, certify=True, seed=DEFAULT_SEED) -> MonotonicityReport:
    """Invariant counts of an algebra and a contraction of it; ``holds`` iff N1 >= N0."""
    if L0.dim != L1.dim:
        raise ValueError(f"dimension mismatch: {L0.dim} vs {L1.dim}")
    r0 = invariant_count(L0, trials, bound, certify, seed)
    r1 = invariant_count(L1, trials, bound, certify, seed)
    return MonotonicityReport(
        r0.invariant_count, r1.invariant_count, r0.generic_rank, r1.generic_rank,
        r0.rank_certified and r1.rank_certified,
    )


class Verdict(enum.Enum):
    RULED_OUT = "RuledOut"
    POSSIBLE = "Possible"

    def __str__(self):
        return self.value


def contraction_necessary_condition(L0: LieAlgebra, L1: LieAlgebra, **count_options) -> Verdict:
    """RuledOut when L1 cannot be a contraction of L0 (dimension or invariant count).

    POSSIBLE does not assert that a contraction exists.
    """
    if L0.dim != L1.dim:
        return Verdict.RULED_OUT
    n0 = invariant_count(L0, **count_options).invariant_count
    n1 = invariant_count(L1, **count_options).invariant_count
    return Verdict.RULED_OUT if n1 < n0 else Verdict.POSSIBLE
