from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orebc.linalg import Matrix, kernel_basis, rank, rref
from orebc.scalars import QQ, FieldSpec


def test_rref_identity():
    I = Matrix.identity(QQ, 3)
    R, piv = rref(I)
    assert R == I and piv == [0, 1, 2]


def test_rref_zero():
    Z = Matrix.zeros(QQ, 2, 3)
    R, piv = rref(Z)
    assert R == Z and piv == []


def test_rref_rank_one():
    R, piv = rref(Matrix(QQ, [[1, 2], [2, 4]]))
    assert R == Matrix(QQ, [[1, 2], [0, 0]]) and piv == [0]


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(QQ, 3)) == []
    assert kernel_basis(Matrix.zeros(QQ, 2, 2)) == [[1, 0], [0, 1]]
    assert kernel_basis(Matrix(QQ, [[1, 1]])) == [[1, -1]]


def test_kernel_normalization_first_entry():
    ker = kernel_basis(Matrix(QQ, [[2, 0, 4], [0, 0, 0]]))
    # free column 2 gives (-2, 0, 1), rescaled so its first entry is 1
    assert ker == [[0, 1, 0], [1, 0, Fraction(-1, 2)]]


def test_empty_rows():
    assert kernel_basis(Matrix(QQ, [], cols=2)) == [[1, 0], [0, 1]]


entries = st.integers(-4, 4)


def matrices(field):
    return st.integers(1, 5).flatmap(
        lambda r: st.integers(1, 6).flatmap(
            lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r)
        )).map(lambda rows: Matrix(field, rows))


@settings(max_examples=150)
@given(st.sampled_from([QQ, FieldSpec.prime(3), FieldSpec.prime(101)]).flatmap(matrices))
def test_kernel_properties(M):
    ker = kernel_basis(M)
    zero = [M.field.zero()] * M.rows
    for v in ker:
        assert M.apply(v) == zero
        assert next(a for a in v if a) == 1
    assert rank(M) + len(ker) == M.cols
    R, piv = rref(M)
    assert rref(R) == (R, piv)
    assert piv == sorted(piv) and len(set(piv)) == len(piv)
