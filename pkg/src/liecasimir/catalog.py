"""Built-in algebras and contraction families used by the tests and the CLI."""

from __future__ import annotations

from dataclasses import dataclass

from .lie_core import LieAlgebra
from .contraction import ContractionFamily

__all__ = [
    "abelian",
    "heisenberg",
    "frobenius_model",
    "sl2",
    "so3",
    "e2",
    "heisenberg_plus_abelian",
    "CatalogEntry",
    "CATALOG",
    "build",
    "catalog_algebras",
    "Fixture",
    "fixture_families",
    "r2_plus_r2",
]


def abelian(n: int) -> LieAlgebra:
    if n < 0:
        raise ValueError("n must be non-negative")
    return LieAlgebra(n, {}, tuple(f"X{i + 1}" for i in range(n)), f"abelian({n})")


def heisenberg(n: int) -> LieAlgebra:
    """h_n: basis X_1..X_n, Y_1..Y_n, Z with [X_i, Y_i] = Z."""
    if n < 1:
        raise ValueError("n must be at least 1")
    z = 2 * n
    brackets = {(i, n + i): [(z, 1)] for i in range(n)}
    labels = [f"X{i + 1}" for i in range(n)] + [f"Y{i + 1}" for i in range(n)] + ["Z"]
    return LieAlgebra(2 * n + 1, brackets, tuple(labels), f"heisenberg({n})")


def frobenius_model(n: int) -> LieAlgebra:
    """Rank-one solvable extension of h_n by U with [U, X_i] = X_i, [U, Z] = Z.

    Basis order is U, X_1..X_n, Y_1..Y_n, Z.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    z = 2 * n + 1
    brackets = {}
    for i in range(n):
        x, y = 1 + i, 1 + n + i
        brackets[(x, y)] = [(z, 1)]
        brackets[(0, x)] = [(x, 1)]
    brackets[(0, z)] = [(z, 1)]
    labels = ["U"] + [f"X{i + 1}" for i in range(n)] + [f"Y{i + 1}" for i in range(n)] + ["Z"]
    return LieAlgebra(2 * n + 2, brackets, tuple(labels), f"frobenius_model({n})")


def sl2() -> LieAlgebra:
    return LieAlgebra(
        3,
        {(0, 1): [(1, 2)], (0, 2): [(2, -2)], (1, 2): [(0, 1)]},
        ("H", "E", "F"),
        "sl2",
    )


def so3() -> LieAlgebra:
    return LieAlgebra(
        3,
        {(0, 1): [(2, 1)], (1, 2): [(0, 1)], (2, 0): [(1, 1)]},
        ("X1", "X2", "X3"),
        "so3",
    )


def e2() -> LieAlgebra:
    """Euclidean algebra as the so3 limit: [X2, X3] = X1, [X3, X1] = X2, [X1, X2] = 0."""
    return LieAlgebra(3, {(1, 2): [(0, 1)], (2, 0): [(1, 1)]}, ("X1", "X2", "X3"), "e2")


def heisenberg_plus_abelian(n: int) -> LieAlgebra:
    """frobenius_model(n) with U made central: h_n plus an abelian direction, same basis order."""
    z = 2 * n + 1
    brackets = {(1 + i, 1 + n + i): [(z, 1)] for i in range(n)}
    labels = ["U"] + [f"X{i + 1}" for i in range(n)] + [f"Y{i + 1}" for i in range(n)] + ["Z"]
    return LieAlgebra(2 * n + 2, brackets, tuple(labels), f"heisenberg_plus_abelian({n})")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    nparams: int
    builder: object
    expected_count: object  # callable(params) -> int
    summary: str


CATALOG = {
    "abelian": CatalogEntry("abelian", 1, abelian, lambda n: n, "abelian(n), dimension n"),
    "heisenberg": CatalogEntry(
        "heisenberg", 1, heisenberg, lambda n: 1, "Heisenberg h_n, dimension 2n+1"
    ),
    "frobenius_model": CatalogEntry(
        "frobenius_model", 1, frobenius_model, lambda n: 0,
        "frobeniusian model over h_n, dimension 2n+2",
    ),
    "sl2": CatalogEntry("sl2", 0, sl2, lambda: 1, "sl(2) in the basis H, E, F"),
    "so3": CatalogEntry("so3", 0, so3, lambda: 1, "so(3), cyclic brackets"),
    "e2": CatalogEntry("e2", 0, e2, lambda: 1, "Euclidean e(2), the so3 limit"),
    "heisenberg_plus_abelian": CatalogEntry(
        "heisenberg_plus_abelian", 1, heisenberg_plus_abelian, lambda n: 2,
        "h_n plus a central direction, dimension 2n+2",
    ),
}


def build(name: str, *params: int) -> LieAlgebra:
    try:
        entry = CATALOG[name]
    except KeyError:
        raise KeyError(
            f"unknown catalog entry {name!r}; available: {', '.join(sorted(CATALOG))}"
        ) from None
    if len(params) != entry.nparams:
        raise ValueError(f"{name} takes {entry.nparams} integer parameter(s), got {len(params)}")
    return entry.builder(*params)


def expected_count(name: str, *params: int) -> int:
    return CATALOG[name].expected_count(*params)


def catalog_algebras(max_dim=8):
    """(name, params, algebra) for a spread of catalog members of dimension <= max_dim."""
    out = []
    for n in range(0, max_dim + 1):
        out.append(("abelian", (n,), abelian(n)))
    for n in range(1, (max_dim - 1) // 2 + 1):
        out.append(("heisenberg", (n,), heisenberg(n)))
    for n in range(1, (max_dim - 2) // 2 + 1):
        out.append(("frobenius_model", (n,), frobenius_model(n)))
        out.append(("heisenberg_plus_abelian", (n,), heisenberg_plus_abelian(n)))
    if max_dim >= 3:
        out += [("sl2", (), sl2()), ("so3", (), so3()), ("e2", (), e2())]
    return out


@dataclass(frozen=True)
class Fixture:
    name: str
    source: LieAlgebra
    family: ContractionFamily
    expected: LieAlgebra


def _triangular_frobenius_family():
    # both endpoints have N = 0; the limit has a strictly larger derivation algebra
    from .cli_formats import parse_ratfunc

    return ContractionFamily.from_matrix(
        [[parse_ratfunc(x) for x in row] for row in _TRIANGULAR_FROBENIUS_MATRIX]
    )


def fixture_families():
    """Contraction fixtures: (name, source algebra, family, expected limit)."""
    fixtures = [
        Fixture("sl2_to_h1", sl2(), ContractionFamily.diagonal([2, 1, 1]), _sl2_limit()),
        Fixture("so3_to_e2", so3(), ContractionFamily.diagonal([1, 1, 0]), e2()),
    ]
    for n in (1, 2):
        fixtures.append(
            Fixture(
                f"frobenius_model{n}_to_h{n}_plus_abelian",
                frobenius_model(n),
                ContractionFamily.diagonal([1] + [0] * (2 * n + 1)),
                heisenberg_plus_abelian(n),
            )
        )
    for name, _, alg in catalog_algebras(max_dim=6):
        if alg.dim == 0 or alg.is_abelian():
            continue
        fixtures.append(
            Fixture(
                f"{alg.name}_to_abelian",
                alg,
                ContractionFamily.diagonal([1] * alg.dim),
                abelian(alg.dim),
            )
        )
    fixtures.append(
        Fixture(
            "r2r2_to_frobenius_model1",
            r2_plus_r2(),
            _triangular_frobenius_family(),
            _triangular_frobenius_limit(),
        )
    )
    return fixtures


def _sl2_limit():
    # weights (E, F, H) = (1, 1, 2) in the basis order H, E, F: only [E, F] = H survives
    return LieAlgebra(3, {(1, 2): [(0, 1)]}, ("H", "E", "F"), "sl2_limit")


def r2_plus_r2() -> LieAlgebra:
    """aff(1) + aff(1): [A1, B1] = B1, [A2, B2] = B2.  Frobeniusian, dimension 4."""
    return LieAlgebra(4, {(0, 1): [(1, 1)], (2, 3): [(3, 1)]}, ("A1", "B1", "A2", "B2"), "r2+r2")


# Upper-triangular family found by a randomized search over entries +-e^k; the limit
# is frobenius_model(1) in the basis (-Y, Z, U, X).
_TRIANGULAR_FROBENIUS_MATRIX = (
    ("e^2", "0", "1", "0"),
    ("0", "e", "-e^2", "1/e"),
    ("0", "0", "1", "0"),
    ("0", "0", "0", "e"),
)


def _triangular_frobenius_limit():
    return LieAlgebra(
        4, {(0, 3): [(1, 1)], (1, 2): [(1, -1)], (2, 3): [(3, 1)]},
        ("A1", "B1", "A2", "B2"), "frobenius_model(1)'",
    )
