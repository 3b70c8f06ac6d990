"""Exact scalars, sparse multivariate polynomials over Q, and the field Q(e).

Scalars are :class:`fractions.Fraction` throughout.  ``MultiPoly`` stores a
polynomial as a map from exponent tuples to nonzero coefficients;
``RationalFunction`` is a reduced quotient of univariate polynomials in the
contraction parameter, kept with a monic denominator.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = [
    "Rational",
    "as_rational",
    "MultiPoly",
    "grlex_key",
    "monomials_of_degree",
    "UPoly",
    "RationalFunction",
    "Divergent",
    "DIVERGENT",
    "SingularFamily",
    "ratfunc_limit_at_zero",
    "ratfunc_matrix_inverse",
]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction.  Floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def grlex_key(exponents):
    """Sort key for graded-lexicographic order (larger key = larger monomial)."""
    return (sum(exponents), tuple(exponents))


def monomials_of_degree(num_vars: int, degree: int):
    """All exponent tuples of total degree ``degree``, largest first in grlex."""
    out = [e for e in product(range(degree + 1), repeat=num_vars) if sum(e) == degree]
    out.sort(key=grlex_key, reverse=True)
    return out


class MultiPoly:
    """Sparse polynomial in ``num_vars`` variables with rational coefficients."""

    __slots__ = ("num_vars", "terms", "_hash")

    def __init__(self, num_vars: int, terms=None):
        self.num_vars = num_vars
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != num_vars:
                    raise ValueError(
                        f"exponent vector {exps} does not have length {num_vars}"
                    )
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                coeff = as_rational(coeff)
                if coeff:
                    clean[exps] = coeff
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, num_vars, terms):
        # trusted constructor: terms already normalized
        obj = cls.__new__(cls)
        obj.num_vars = num_vars
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, num_vars):
        return cls._raw(num_vars, {})

    @classmethod
    def constant(cls, num_vars, value):
        value = as_rational(value)
        if not value:
            return cls.zero(num_vars)
        return cls._raw(num_vars, {(0,) * num_vars: value})

    @classmethod
    def variable(cls, num_vars, index, coeff=1):
        exps = [0] * num_vars
        exps[index] = 1
        return cls(num_vars, {tuple(exps): coeff})

    @classmethod
    def linear(cls, coeffs):
        """The linear form sum_k coeffs[k] * x_k."""
        n = len(coeffs)
        terms = {}
        for k, c in enumerate(coeffs):
            c = as_rational(c)
            if c:
                exps = [0] * n
                exps[k] = 1
                terms[tuple(exps)] = c
        return cls._raw(n, terms)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, degree=None) -> bool:
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    def leading_term(self):
        """(exponents, coeff) of the grlex-largest term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=grlex_key)
        return exps, self.terms[exps]

    def variables_used(self):
        used = set()
        for exps in self.terms:
            used.update(i for i, e in enumerate(exps) if e)
        return used

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.num_vars, other)
        if other.num_vars != self.num_vars:
            raise ValueError(
                f"variable count mismatch: {self.num_vars} vs {other.num_vars}"
            )
        return other

    def __add__(self, other):
        other = self._check(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, 0) + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return MultiPoly._raw(self.num_vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = as_rational(other)
            if not c:
                return MultiPoly.zero(self.num_vars)
            return MultiPoly._raw(self.num_vars, {e: v * c for e, v in self.terms.items()})
        other = self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return MultiPoly._raw(self.num_vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.constant(self.num_vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divexact(self, divisor: "MultiPoly") -> "MultiPoly":
        """Quotient of an exact division; raises ArithmeticError if there is a remainder."""
        divisor = self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lt_exps, lt_coeff = divisor.leading_term()
        if len(divisor.terms) == 1:
            terms = {}
            for exps, c in self.terms.items():
                q = tuple(a - b for a, b in zip(exps, lt_exps))
                if min(q, default=0) < 0:
                    raise ArithmeticError("division is not exact")
                terms[q] = c / lt_coeff
            return MultiPoly._raw(self.num_vars, terms)
        rem = dict(self.terms)
        quot = {}
        while rem:
            exps = max(rem, key=grlex_key)
            q = tuple(a - b for a, b in zip(exps, lt_exps))
            if min(q, default=0) < 0:
                raise ArithmeticError("division is not exact")
            qc = rem[exps] / lt_coeff
            quot[q] = qc
            for dexps, dc in divisor.terms.items():
                e = tuple(a + b for a, b in zip(q, dexps))
                s = rem.get(e, 0) - qc * dc
                if s:
                    rem[e] = s
                else:
                    rem.pop(e, None)
        return MultiPoly._raw(self.num_vars, quot)

    # -- calculus and evaluation -------------------------------------------

    def diff(self, index: int) -> "MultiPoly":
        terms = {}
        for exps, c in self.terms.items():
            p = exps[index]
            if p:
                e = list(exps)
                e[index] = p - 1
                terms[tuple(e)] = c * p
        return MultiPoly._raw(self.num_vars, terms)

    def __call__(self, point):
        return self.evaluate(point)

    def evaluate(self, point):
        if len(point) != self.num_vars:
            raise ValueError(f"expected {self.num_vars} coordinates, got {len(point)}")
        total = Fraction(0)
        for exps, c in self.terms.items():
            v = c
            for x, p in zip(point, exps):
                if p:
                    v *= x**p
            total += v
        return total

    # -- comparison and printing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.num_vars == other.num_vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MultiPoly.constant(self.num_vars, other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def to_string(self, names=None) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.num_vars)]
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                names[i] if p == 1 else f"{names[i]}^{p}" for i, p in enumerate(exps) if p
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"MultiPoly({self.num_vars}, {self.to_string()!r})"


# ---------------------------------------------------------------------------
# univariate polynomials and Q(e)
# ---------------------------------------------------------------------------


class UPoly:
    """Dense univariate polynomial, coefficients stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls([0] * degree + [coeff])

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1

    def lead(self):
        return self.coeffs[-1]

    def order_at_zero(self):
        """Exponent of the lowest nonzero term (None for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly(out)

    def __neg__(self):
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            other = UPoly([other])
        if not self.coeffs or not other.coeffs:
            return UPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UPoly(out)

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree()
        lead = other.lead()
        if len(rem) - 1 < dq:
            return UPoly(), UPoly(rem)
        quot = [Fraction(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1 - dq, -1, -1):
            q = rem[k + dq] / lead
            quot[k] = q
            if q:
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= q * c
        return UPoly(quot), UPoly(rem[:dq])

    def monic(self):
        if self.is_zero():
            return self
        lead = self.lead()
        return UPoly([c / lead for c in self.coeffs])

    def evaluate(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return isinstance(other, UPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_string(self, var="e"):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"UPoly({self.to_string()!r})"


def _primitive_ints(p: UPoly):
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    content = 0
    for c in ints:
        content = gcd(content, c)
    return [c // content for c in ints]


def _prem(a, b):
    # pseudo-remainder of integer coefficient lists (low degree first)
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for j, c in enumerate(b):
            a[shift + j] -= la * c
        while a and not a[-1]:
            a.pop()
    return a


def upoly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd via a primitive pseudo-remainder sequence over Z."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    x, y = _primitive_ints(a), _primitive_ints(b)
    if len(x) < len(y):
        x, y = y, x
    while y:
        r = _prem(x, y)
        x, y = y, (_primitive_ints(UPoly(r)) if r else [])
    return UPoly(x).monic()


class Divergent:
    """Sentinel: the limit at e = 0 does not exist."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "DIVERGENT"

    def __bool__(self):
        return False


DIVERGENT = Divergent()


class SingularFamily(ValueError):
    """The matrix over Q(e) has identically vanishing determinant."""


class RationalFunction:
    """Element of Q(e): reduced numerator/denominator, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, UPoly):
            num = UPoly([num])
        if den is None:
            den = UPoly([1])
        elif not isinstance(den, UPoly):
            den = UPoly([den])
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = UPoly(), UPoly([1])
            return
        g = upoly_gcd(num, den)
        if g.degree() > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        lead = den.lead()
        if lead != 1:
            num = UPoly([c / lead for c in num.coeffs])
            den = UPoly([c / lead for c in den.coeffs])
        self.num, self.den = num, den

    @classmethod
    def eps_power(cls, k: int, coeff=1):
        """coeff * e^k for any integer k."""
        if k >= 0:
            return cls(UPoly.monomial(k, coeff))
        return cls(UPoly([coeff]), UPoly.monomial(-k))

    @classmethod
    def coerce(cls, value):
        if isinstance(value, RationalFunction):
            return value
        return cls(UPoly([as_rational(value)]))

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def valuation(self):
        """ord_0(num) - ord_0(den); None for zero."""
        if self.num.is_zero():
            return None
        return self.num.order_at_zero() - self.den.order_at_zero()

    def is_constant(self):
        return self.num.degree() <= 0 and self.den.degree() == 0

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.coeffs[0] if self.num.coeffs else Fraction(0)

    def __add__(self, other):
        other = RationalFunction.coerce(other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        obj = RationalFunction.__new__(RationalFunction)
        obj.num, obj.den = -self.num, self.den
        return obj

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        other = RationalFunction.coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunction.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalFunction(1) / (self ** (-k))
        result = RationalFunction(1)
        for _ in range(k):
            result = result * self
        return result

    def evaluate(self, eps0):
        """Value at e = eps0, or None at a pole."""
        eps0 = as_rational(eps0)
        d = self.den.evaluate(eps0)
        if not d:
            return None
        return self.num.evaluate(eps0) / d

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            try:
                other = RationalFunction.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def to_string(self, var="e"):
        n = self.num.to_string(var)
        if self.den.degree() == 0:
            return n
        d = self.den.to_string(var)
        if len([c for c in self.num.coeffs if c]) > 1:
            n = f"({n})"
        if len([c for c in self.den.coeffs if c]) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"RationalFunction({self.to_string()!r})"


def ratfunc_limit_at_zero(f: RationalFunction):
    """lim_{e->0} f, or ``DIVERGENT`` when f has a pole at 0."""
    if f.is_zero():
        return Fraction(0)
    a = f.num.order_at_zero()
    b = f.den.order_at_zero()
    if a > b:
        return Fraction(0)
    if a < b:
        return DIVERGENT
    return f.num.coeffs[a] / f.den.coeffs[b]


def _upoly_lcm(a: UPoly, b: UPoly) -> UPoly:
    return (a * b).divmod(upoly_gcd(a, b))[0].monic()


def _exact_div(a: UPoly, b: UPoly) -> UPoly:
    q, r = a.divmod(b)
    if not r.is_zero():
        raise ArithmeticError("fraction-free step was not exact")
    return q


def ratfunc_matrix_inverse(g):
    """Inverse of a square matrix over Q(e) via adjugate and determinant.

    Rows are cleared of denominators (P = D g), then fraction-free
    Gauss-Jordan on [P | I] over Q[e] leaves det(P) * I on the left and
    adj(P) (up to the same sign) on the right; g^-1 = P^-1 D.
    """
    n = len(g)
    if any(len(row) != n for row in g):
        raise ValueError("matrix must be square")
    rows = [[RationalFunction.coerce(x) for x in row] for row in g]
    scale = []
    aug = []
    for i, row in enumerate(rows):
        lcm = UPoly([1])
        for f in row:
            if f.den.degree() > 0:
                lcm = _upoly_lcm(lcm, f.den)
        scale.append(lcm)
        poly_row = [(f.num * lcm).divmod(f.den)[0] for f in row]
        aug.append(poly_row + [UPoly([int(i == j)]) for j in range(n)])
    prev = UPoly([1])
    for k in range(n):
        pivot = None
        for r in range(k, n):
            if not aug[r][k].is_zero() and (pivot is None or aug[r][k].degree() < aug[pivot][k].degree()):
                pivot = r
        if pivot is None:
            raise SingularFamily("matrix is singular over Q(e)")
        aug[k], aug[pivot] = aug[pivot], aug[k]
        pk = aug[k]
        piv = pk[k]
        for i in range(n):
            if i == k:
                continue
            ri = aug[i]
            lead = ri[k]
            for j in range(2 * n):
                if j == k:
                    continue
                val = piv * ri[j]
                if not lead.is_zero() and not pk[j].is_zero():
                    val = val - lead * pk[j]
                ri[j] = _exact_div(val, prev) if not val.is_zero() else val
            ri[k] = UPoly()
        prev = piv
    det = aug[0][0]
    # all diagonal entries equal the determinant of the row-permuted P
    return [
        [RationalFunction(aug[i][n + j] * scale[j], det) for j in range(n)]
        for i in range(n)
    ]
