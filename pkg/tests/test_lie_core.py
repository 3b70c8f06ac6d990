from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import basis_changes, rationals
from liecasimir import linalg
from liecasimir.catalog import abelian, frobenius_model, heisenberg, sl2, so3
from liecasimir.lie_core import (
    BasisChange,
    LieAlgebra,
    SingularBasisChange,
    adjoint_stack,
    bracket,
    center,
    change_basis,
    jacobi_check,
)
from oracles import dense_structure_constants, jacobi_residual_dense, transform_constants


def e(i, n=3):
    return [Fraction(int(i == j)) for j in range(n)]


def test_heisenberg_bracket():
    assert bracket(heisenberg(1), e(0), e(1)) == e(2)


def test_sl2_bracket_linearity():
    # [H, E + F] = 2E - 2F
    assert bracket(sl2(), e(0), [0, 1, 1]) == [0, 2, -2]


def test_bracket_length_mismatch():
    with pytest.raises(ValueError):
        bracket(sl2(), [1, 0], [0, 1, 0])


def test_storage_normalizes_orientation():
    L = LieAlgebra(3, {(1, 0): [(2, 1)]})
    assert L.brackets == {(0, 1): ((2, Fraction(-1)),)}
    assert L.structure_constant(1, 0, 2) == 1


def test_jacobi_passes():
    assert jacobi_check(heisenberg(2)) == []
    assert jacobi_check(sl2()) == []
    assert jacobi_check(so3()) == []


def test_jacobi_violation_reported():
    # [X1,X2]=X3, [X1,X3]=X1, [X2,X3]=X2: cyclic sum on (1,2,3) is 0 - X3 - X3
    L = LieAlgebra(3, {(0, 1): [(2, 1)], (0, 2): [(0, 1)], (1, 2): [(1, 1)]})
    bad = jacobi_check(L)
    assert [v.triple for v in bad] == [(0, 1, 2)]
    assert bad[0].residual == (0, 0, -2)
    assert list(bad[0].residual) == jacobi_residual_dense(dense_structure_constants(L), 0, 1, 2)


def test_jacobi_reports_all_violations():
    # two independent broken triples in dimension 4
    L = LieAlgebra(4, {(0, 1): [(2, 1)], (0, 2): [(0, 1)], (1, 2): [(1, 1)], (1, 3): [(1, 1)], (2, 3): [(3, 1)]})
    triples = [v.triple for v in jacobi_check(L)]
    assert len(triples) >= 2
    C = dense_structure_constants(L)
    for t in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]:
        assert (t in triples) == any(jacobi_residual_dense(C, *t))


def test_change_basis_identity():
    assert change_basis(sl2(), BasisChange.identity(3)) == sl2()


def test_change_basis_swap():
    L = change_basis(heisenberg(1), BasisChange.permutation([1, 0, 2]))
    assert L.structure_constant(0, 1, 2) == -1


def test_change_basis_diagonal_rescale():
    L = change_basis(sl2(), BasisChange.diagonal([1, 2, Fraction(1, 2)]))
    assert L.same_constants(sl2())


def test_singular_basis_change():
    with pytest.raises(SingularBasisChange):
        BasisChange([[1, 2], [2, 4]])


@settings(max_examples=60)
@given(st.sampled_from([sl2(), so3(), heisenberg(1), heisenberg(2), frobenius_model(1)]), st.data())
def test_change_basis_matches_dense_oracle(L, data):
    g = data.draw(basis_changes(L.dim))
    out = change_basis(L, g)
    expected = transform_constants(L, g.matrix, g._inverse)
    n = L.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                assert out.structure_constant(i, j, k) == expected[i][j][k]


@settings(max_examples=60)
@given(st.sampled_from([sl2(), so3(), heisenberg(2), frobenius_model(1), frobenius_model(2)]), st.data())
def test_change_basis_roundtrip_and_jacobi(L, data):
    g = data.draw(basis_changes(L.dim))
    M = change_basis(L, g)
    assert jacobi_check(M) == []
    assert change_basis(M, g.inverse()).same_constants(L)


@given(st.lists(rationals, min_size=3, max_size=3), st.lists(rationals, min_size=3, max_size=3),
       st.lists(rationals, min_size=3, max_size=3), rationals)
def test_bracket_bilinear_antisymmetric(u, v, w, a):
    for L in (sl2(), so3()):
        assert bracket(L, u, u) == [0, 0, 0]
        assert bracket(L, u, v) == [-c for c in bracket(L, v, u)]
        lhs = bracket(L, [a * p + q for p, q in zip(u, w)], v)
        rhs = [a * p + q for p, q in zip(bracket(L, u, v), bracket(L, w, v))]
        assert lhs == rhs


def test_center_examples():
    for n in (1, 2, 3):
        z = center(heisenberg(n))
        assert len(z) == 1
        assert all(c == 0 for c in z[0][:-1]) and z[0][-1] != 0
    assert len(center(abelian(3))) == 3
    assert center(sl2()) == []


@pytest.mark.parametrize("L", [sl2(), heisenberg(2), frobenius_model(2), abelian(4)], ids=lambda L: L.name)
def test_center_vectors_commute_and_dimension_formula(L):
    z = center(L)
    for v in z:
        for j in range(L.dim):
            assert not any(bracket(L, v, e(j, L.dim)))
    assert len(z) + linalg.rank(adjoint_stack(L)) == L.dim


def test_degenerate_dimensions():
    assert jacobi_check(LieAlgebra(0)) == []
    assert center(LieAlgebra(1)) == [[1]]
