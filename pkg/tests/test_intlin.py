"""Exact integer linear algebra: SNF laws, determinants, invariant factors."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from braidkit.intlin import (
    IntMatrix,
    abelian_invariants,
    det,
    identity,
    inv_unimodular,
    lattice_restrict,
    mat_mul,
    mat_pow,
    matrix,
    parse_matrix,
    serialize_matrix,
    smith_normal_form,
)

small_int = st.integers(-9, 9)


def matrices_3x3():
    return st.lists(st.lists(small_int, min_size=3, max_size=3),
                    min_size=3, max_size=3).map(matrix)


@settings(max_examples=60)
@given(matrices_3x3())
def test_snf_transforms(a):
    r = smith_normal_form(a)
    assert mat_mul(r.p, a, r.q) == r.d
    assert abs(det(r.p)) == 1
    assert abs(det(r.q)) == 1
    diag = [r.d.rows[i][i] for i in range(3)]
    assert all(r.d.rows[i][j] == 0 for i in range(3) for j in range(3) if i != j)
    for x, y in zip(diag, diag[1:]):
        if y != 0:
            assert x != 0 and y % x == 0


@settings(max_examples=60)
@given(matrices_3x3())
def test_snf_preserves_absolute_determinant(a):
    r = smith_normal_form(a)
    assert abs(det(a)) == abs(r.d.rows[0][0] * r.d.rows[1][1] * r.d.rows[2][2])


@settings(max_examples=60)
@given(matrices_3x3())
def test_unimodular_inverse(a):
    p = smith_normal_form(a).p
    assert mat_mul(p, inv_unimodular(p)) == identity(3)


def test_det_examples():
    assert det(matrix([[1, 2], [3, 4]])) == -2
    assert det(identity(4)) == 1
    assert det(matrix([[2, 0, 0], [0, 3, 0], [0, 0, 5]])) == 30


def test_mat_pow():
    m = matrix([[1, 1], [0, 1]])
    assert mat_pow(m, 5) == matrix([[1, 5], [0, 1]])
    assert mat_pow(m, 0) == identity(2)


def test_abelian_invariants_basic():
    # Z^2 / <(2,0),(0,3)> = Z/2 x Z/3 = Z/6
    assert abelian_invariants(matrix([[2, 0], [0, 3]]), 2) == (0, (6,))
    # no relators: free
    assert abelian_invariants(matrix([[0, 0]]), 2) == (2, ())
    # unit invariant factors are dropped
    assert abelian_invariants(matrix([[1, 0], [0, 4]]), 2) == (0, (4,))


def test_lattice_restrict_identity():
    basis = ((1, 0, 1), (0, 1, 1))
    # the identity acts as the identity on any invariant sublattice
    assert lattice_restrict(identity(3), basis) == identity(2)


def test_serialize_round_trip():
    m = matrix([[0, -7], [123456789123456789, 1]])
    assert parse_matrix(serialize_matrix(m)) == m


def test_snf_rectangular():
    a = matrix([[2, 4, 6], [4, 8, 12]])
    r = smith_normal_form(a)
    assert mat_mul(r.p, a, r.q) == r.d
    assert r.d.rows[0][0] == 2
    assert r.d.rows[1][1] == 0
