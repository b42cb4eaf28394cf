import random

import pytest

from _support import brute_centralizer_dim, poly_in, presets, random_elem
from orebc.centralizer import (centralizer_kbasis, leading_proportionality, leading_relation_holds,
                               module_basis, reduce_in_module)
from orebc.errors import HypothesisViolated, NotInCentralizer, ZeroElement
from orebc.ore import commutes, power, qweyl, weyl
from orebc.poly import Poly
from orebc.scalars import QQ, FieldSpec

W = weyl()
QM = qweyl(-1)
y = Poly.gen(QQ)


def test_kbasis_weyl_x():
    assert centralizer_kbasis(W.x, 3, 3) == [W.one, W.x, W.x ** 2, W.x ** 3]


def test_kbasis_of_one_is_everything():
    kb = centralizer_kbasis(W.one, 2, 1)
    assert len(kb) == 6
    assert set(kb) == {W.monomial(c, d) for c in range(2) for d in range(3)}


def test_kbasis_qweyl_minus_one():
    kb = centralizer_kbasis(QM.x ** 2, 2, 2)
    # x^2 is central when q = -1, so every monomial in the box commutes
    assert len(kb) == 9 == brute_centralizer_dim(QM, QM.x ** 2, 2, 2)
    for e in (QM.one, QM.x, QM.x ** 2, QM.y ** 2):
        assert e in kb


def test_kbasis_zero_element():
    with pytest.raises(ZeroElement):
        centralizer_kbasis(W.zero, 2, 2)


def test_module_basis_weyl_x_squared():
    mb = module_basis(W.x ** 2, 3)
    assert mb.residue_classes == {0: W.one, 1: W.x}
    assert mb.rank == 2


def test_module_basis_degree_one():
    mb = module_basis(W.elem([y, 1]), 3, 3)
    assert mb.residue_classes == {0: W.one}


def test_module_basis_root_of_unity():
    with pytest.raises(HypothesisViolated):
        module_basis(QM.x ** 2, 4)
    mb = module_basis(QM.x ** 2, 4, strict=False)
    assert not mb.hypothesis_holds
    assert mb.rank <= 2


def test_leading_proportionality_examples():
    assert leading_proportionality(W.x, [W.one, W.x, W.x ** 2])
    b = W.elem([1, y])
    assert leading_proportionality(W.one, [b, b.scale(2)])
    assert not leading_proportionality(W.one, [W.elem([0, y]), W.elem([0, y + 1])])
    with pytest.raises(NotInCentralizer):
        leading_proportionality(W.x, [W.y])


@pytest.mark.parametrize("name", list(presets()))
def test_kbasis_dimension_matches_brute_force(name):
    A = presets()[name]
    rng = random.Random(31)
    for _ in range(3):
        a = random_elem(rng, A, 2, 1, nonzero=True)
        bx, by = rng.randint(1, 3), rng.randint(0, 3)
        kb = centralizer_kbasis(a, bx, by)
        assert all(commutes(e, a) for e in kb)
        assert len(kb) == brute_centralizer_dim(A, a, bx, by)


@pytest.mark.parametrize("p", [[0, 0, 1], [1, 0, 1], [0, 0, 0, 1], [0, 1, 1]])
@pytest.mark.parametrize("delta", [0, 1, [0, 1], [1, 0, 1]])
def test_proportionality_for_nonlinear_sigma(p, delta):
    A = power(p, delta)
    rng = random.Random(41)
    for _ in range(2):
        a = random_elem(rng, A, 2, 1, nonzero=True, min_x=1)
        for e in centralizer_kbasis(a, 3, 4):
            assert leading_relation_holds(a, e)
        assert leading_proportionality(a, centralizer_kbasis(a, 3, 4))
        mb = module_basis(a, 3, 4)
        assert mb.rank <= a.degree and mb.hypothesis_holds


@pytest.mark.parametrize("name", list(presets()))
def test_module_basis_spans_powers(name):
    A = presets()[name]
    rng = random.Random(53)
    Wd = random_elem(rng, A, 1, 1, nonzero=True, min_x=1)
    a = poly_in(Wd, [1, 0, 1])
    mb = module_basis(a, 4, strict=False) if name == "qweyl(-1)" else module_basis(a, 4)
    assert mb.rank <= a.degree
    assert all(commutes(p, a) for p in mb.residue_classes.values())
    if mb.hypothesis_holds:
        # W, W^2 and their products with a reduce to zero
        for e in (Wd, Wd * Wd, a * Wd):
            if e.degree <= 4:
                assert not reduce_in_module(e, a, mb.residue_classes)


def test_rank_bound_over_prime_field():
    A = power([0, 0, 1], 1, FieldSpec.prime(5))
    a = A.x * A.x + A.y * A.x
    mb = module_basis(a, 4, 4)
    assert mb.rank <= 2
