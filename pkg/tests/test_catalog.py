import pytest

from liecasimir import catalog
from liecasimir.catalog import (
    CATALOG,
    abelian,
    catalog_algebras,
    fixture_families,
    frobenius_model,
    heisenberg,
    r2_plus_r2,
    sl2,
    so3,
)
from liecasimir.contraction import apply_family, contract_limit
from liecasimir.invariants import build_commutator_matrix, invariant_count, polynomial_invariants
from liecasimir.lie_core import BasisChange, center, change_basis, derivation_dim, jacobi_check
from liecasimir.linalg import pfaffian
from liecasimir.scalar_poly import MultiPoly


@pytest.mark.parametrize("name,params,L", catalog_algebras(10), ids=lambda v: str(v))
def test_catalog_algebras_are_lie(name, params, L):
    assert jacobi_check(L) == []


@pytest.mark.parametrize("name,params,L", catalog_algebras(10), ids=lambda v: str(v))
def test_expected_counts(name, params, L):
    rep = invariant_count(L, certify=True)
    assert rep.invariant_count == catalog.expected_count(name, *params)


def test_abelian():
    assert abelian(0).dim == 0 and abelian(0).brackets == {}
    assert invariant_count(abelian(3)).invariant_count == 3
    assert len(center(abelian(5))) == 5


def test_heisenberg_shape():
    h = heisenberg(1)
    assert h.dim == 3 and len(h.brackets) == 1
    assert invariant_count(heisenberg(3)).invariant_count == 1
    z = center(heisenberg(2))
    assert len(z) == 1 and z[0] == [0, 0, 0, 0, 1]


def test_frobenius_model_shape():
    F = frobenius_model(1)
    assert F.dim == 4
    xz = MultiPoly.variable(4, 3)
    assert pfaffian(build_commutator_matrix(F).entries) in (xz * xz, -(xz * xz))
    for n in range(1, 5):
        assert invariant_count(frobenius_model(n), certify=True).invariant_count == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_frobenius_nilradical_is_heisenberg(n):
    F, H = frobenius_model(n), heisenberg(n)
    # drop U (index 0) and shift
    sub = {(i - 1, j - 1): tuple((k - 1, c) for k, c in t) for (i, j), t in F.brackets.items() if i > 0}
    assert sub == H.brackets


def test_classical():
    assert jacobi_check(sl2()) == []
    assert invariant_count(so3()).invariant_count == 1
    (F,) = polynomial_invariants(so3(), 2)
    assert str(F) == "x1^2 + x2^2 + x3^2"


def test_frobenius_weights_alternative_is_lie():
    # any weights with lambda_X + lambda_Y = lambda_Z satisfy Jacobi
    from liecasimir.lie_core import LieAlgebra

    L = LieAlgebra(4, {(1, 2): [(3, 1)], (0, 1): [(1, 2)], (0, 2): [(2, -1)], (0, 3): [(3, 1)]})
    assert jacobi_check(L) == []
    assert invariant_count(L).invariant_count == 0


def test_build_and_errors():
    assert catalog.build("heisenberg", 2).dim == 5
    assert catalog.build("sl2").dim == 3
    with pytest.raises(KeyError) as info:
        catalog.build("e8")
    assert "heisenberg" in str(info.value)
    with pytest.raises(ValueError):
        catalog.build("heisenberg")
    assert set(CATALOG) >= {"abelian", "heisenberg", "frobenius_model", "sl2", "so3"}


def test_fixture_coverage():
    names = {f.name for f in fixture_families()}
    assert {"sl2_to_h1", "so3_to_e2", "frobenius_model1_to_h1_plus_abelian", "r2r2_to_frobenius_model1"} <= names
    assert "sl2_to_abelian" in names and "heisenberg(1)_to_abelian" in names


def test_sl2_fixture_limit_is_heisenberg():
    fx = next(f for f in fixture_families() if f.name == "sl2_to_h1")
    lim = contract_limit(apply_family(fx.source, fx.family))
    # H, E, F -> Z, X, Y: [E, F] = H is [X, Y] = Z
    relabel = change_basis(lim, BasisChange.permutation([1, 2, 0]))
    assert relabel.same_constants(heisenberg(1))


def test_triangular_fixture_is_a_proper_contraction_onto_the_model():
    fx = next(f for f in fixture_families() if f.name == "r2r2_to_frobenius_model1")
    assert fx.source.same_constants(r2_plus_r2())
    assert all(
        fx.family.matrix[i][j].is_zero() for i in range(4) for j in range(i)
    ), "family must be upper triangular"
    lim = contract_limit(apply_family(fx.source, fx.family))
    assert lim.same_constants(fx.expected)
    # proper: the derivation algebra strictly grows (orbit dimension drops)
    assert derivation_dim(lim) > derivation_dim(fx.source)
    # the limit is frobenius_model(1) in the basis (-Y, Z, U, X); model order is U, X, Y, Z
    g = BasisChange([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, 1, 0, 0]])
    assert change_basis(frobenius_model(1), g).same_constants(lim)
    assert invariant_count(lim).invariant_count == 0


def test_derivation_dims():
    assert derivation_dim(abelian(3)) == 9
    assert derivation_dim(sl2()) == 3
    assert derivation_dim(heisenberg(1)) == 6
