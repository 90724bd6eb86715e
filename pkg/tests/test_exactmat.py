"""Exact linear algebra: examples and algebraic invariants."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ezdlab.exactmat import QMatrix, Subspace, kernel_basis, rank, rref, subspace_equal

F = Fraction


def mat(rows):
    return QMatrix.from_rows(rows)


def test_rref_identity():
    red, pivots = rref(mat([[1, 0], [0, 1]]))
    assert red == mat([[1, 0], [0, 1]])
    assert pivots == (0, 1)


def test_rref_rank_one():
    red, pivots = rref(mat([[1, 2], [2, 4]]))
    assert red == mat([[1, 2], [0, 0]])
    assert pivots == (0,)


def test_rref_permutation():
    red, pivots = rref(mat([[0, 1], [1, 0]]))
    assert red == mat([[1, 0], [0, 1]])
    assert pivots == (0, 1)


def test_rank_examples():
    assert rank(mat([[0, 0, 0], [0, 0, 0], [0, 0, 0]])) == 0
    assert rank(mat([[1, 0], [0, 1]])) == 2
    assert rank(mat([[1, 1]])) == 1


def test_kernel_line():
    ker = kernel_basis(mat([[1, 1]]))
    assert ker.basis == ((F(1), F(-1)),)


def test_kernel_identity_is_zero():
    ker = kernel_basis(mat([[1, 0], [0, 1]]))
    assert ker.dim == 0
    assert ker == Subspace.zero(2)


def test_kernel_zero_row_is_everything():
    ker = kernel_basis(mat([[0, 0, 0]]))
    assert ker.dim == 3
    assert ker == Subspace.from_vectors(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def test_subspace_equal_same_line():
    a = Subspace.from_vectors(2, [[1, -1]])
    b = Subspace.from_vectors(2, [[2, -2]])
    assert subspace_equal(a, b)


def test_subspace_equal_different_lines():
    a = Subspace.from_vectors(2, [[1, 0]])
    b = Subspace.from_vectors(2, [[0, 1]])
    assert not subspace_equal(a, b)


def test_subspace_equal_zero():
    assert subspace_equal(Subspace.zero(3), Subspace.from_vectors(3, [[0, 0, 0]]))


def test_subspace_ambient_mismatch():
    with pytest.raises(ValueError):
        subspace_equal(Subspace.zero(2), Subspace.zero(3))


def test_subspace_contains():
    plane = Subspace.from_vectors(3, [[1, 0, 1], [0, 1, 0]])
    assert plane.contains_vector([2, 3, 2])
    assert not plane.contains_vector([1, 0, 0])
    line = Subspace.from_vectors(3, [[1, 1, 1]])
    assert plane.contains(line)


small_fracs = st.fractions(
    min_value=-5, max_value=5, max_denominator=4
)


@st.composite
def matrices(draw, max_dim=5):
    nrows = draw(st.integers(1, max_dim))
    ncols = draw(st.integers(1, max_dim))
    entries = draw(st.lists(small_fracs, min_size=nrows * ncols, max_size=nrows * ncols))
    return QMatrix(nrows, ncols, entries)


@settings(deadline=None, max_examples=60)
@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + kernel_basis(m).dim == m.cols


@settings(deadline=None, max_examples=60)
@given(matrices())
def test_kernel_vectors_annihilate(m):
    for v in kernel_basis(m).basis:
        assert all(x == 0 for x in m.mul_vector(v))


@settings(deadline=None, max_examples=60)
@given(matrices())
def test_rref_idempotent(m):
    red, _ = rref(m)
    red2, _ = rref(red)
    assert red == red2


@settings(deadline=None, max_examples=40)
@given(matrices(max_dim=4), st.randoms(use_true_random=False))
def test_row_equivalent_same_rref(m, rng):
    rows = [list(m.row(i)) for i in range(m.rows)]
    # a few random row operations: swaps, scalings, additions
    for _ in range(6):
        op = rng.choice(["swap", "scale", "add"])
        i = rng.randrange(m.rows)
        j = rng.randrange(m.rows)
        if op == "swap":
            rows[i], rows[j] = rows[j], rows[i]
        elif op == "scale":
            c = F(rng.choice([1, 2, 3, -1, -2]))
            rows[i] = [c * x for x in rows[i]]
        elif i != j:
            c = F(rng.randint(-3, 3))
            rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
    red1, _ = rref(m)
    red2, _ = rref(QMatrix.from_rows(rows))
    assert red1 == red2


@settings(deadline=None, max_examples=40)
@given(matrices(max_dim=4), st.integers(1, 5), st.booleans())
def test_rank_scaling_invariance(m, c, col):
    scale = F(c)
    if col:
        j = 0
        entries = [
            e * scale if k % m.cols == j else e for k, e in enumerate(m.data)
        ]
    else:
        entries = [
            e * scale if k // m.cols == 0 else e for k, e in enumerate(m.data)
        ]
    assert rank(QMatrix(m.rows, m.cols, entries)) == rank(m)
