import random
from fractions import Fraction

import pytest

from _support import poly_in, random_elem, random_scalar_poly
from orebc.annihilator import (POLY_COEFFS, SCALARS, BivarPoly, annihilate, bound_schedule,
                               normalize, render_bivar, verify)
from orebc.errors import NotCommuting, NotFound, ZeroElement, ZeroPolynomial
from orebc.ore import eval_bivar, power, qweyl, weyl
from orebc.poly import Poly, RatFunc
from orebc.scalars import QQ, FieldSpec

W = weyl()
QM = qweyl(-1)
y = Poly.gen(QQ)


def bp(terms, mode=None, F=QQ):
    return BivarPoly(F, terms, mode)


S3_T2 = bp({(3, 0): 1, (0, 2): -1})


def test_cusp_pair():
    f = annihilate(W.x ** 2, W.x ** 3, SCALARS, 3, 2, 0)
    assert f == S3_T2 and verify(f, W.x ** 2, W.x ** 3)
    assert str(f) == "s^3 - t^2"


def test_equal_pair():
    f = annihilate(W.x, W.x)
    assert f == bp({(1, 0): 1, (0, 1): -1})


def test_root_of_unity_scalars_not_found():
    with pytest.raises(NotFound) as info:
        annihilate(QM.x ** 2, QM.y ** 2, SCALARS, 4, 4, 0)
    assert info.value.bounds == (4, 4, 0)


def test_root_of_unity_poly_coeffs():
    f = annihilate(QM.x ** 2, QM.y ** 2, POLY_COEFFS, 1, 1, 2)
    assert f == bp({(0, 1): 1, (0, 0): -(y * y)}, POLY_COEFFS)
    assert str(f) == "t - (y^2)"


def test_verify_examples():
    assert verify(S3_T2, W.x ** 2, W.x ** 3)
    assert not verify(bp({(1, 0): 1, (0, 1): -1}), W.x, W.x ** 2)
    with pytest.raises(ZeroPolynomial):
        verify(bp({}), W.x, W.x)
    with pytest.raises(NotCommuting):
        verify(bp({(1, 1): 1}), W.x, W.y)


def test_normalize_examples():
    assert normalize(bp({(3, 0): 2, (0, 2): -2})) == S3_T2
    f = bp({(0, 1): y * y + y, (0, 0): -(y ** 3 + y * y)}, POLY_COEFFS)
    assert normalize(f) == bp({(0, 1): 1, (0, 0): -y}, POLY_COEFFS)
    s = bp({(1, 0): 1})
    assert normalize(s) == s
    with pytest.raises(ZeroPolynomial):
        normalize(bp({}))


def test_render_poly_mode():
    f = bp({(0, 1): y * y, (0, 0): -(y ** 4)}, POLY_COEFFS)
    assert render_bivar(f) == "(y^2)*t - (y^4)"
    assert render_bivar(bp({(1, 1): Fraction(3, 2), (0, 0): -1})) == "3/2*s*t - 1"


def test_errors():
    with pytest.raises(NotCommuting):
        annihilate(W.x, W.y)
    with pytest.raises(ZeroElement):
        annihilate(W.zero, W.x)


def test_schedule_shape():
    steps = list(bound_schedule(W.x ** 2, W.x ** 3, SCALARS, cap=16))
    assert steps == [(3, 2, 0), (6, 4, 0), (12, 8, 0), (16, 16, 0)]
    steps = list(bound_schedule(W.x, W.x, POLY_COEFFS, max_s=2, cap=4))
    assert steps == [(2, 1, 0), (2, 2, 1), (2, 4, 2), (2, 4, 4)]
    assert list(bound_schedule(W.x, W.x, SCALARS, 4, 4)) == [(4, 4, 0)]


def test_schedule_first_box_suffices_for_polynomials_in_w():
    P, Q = W.x ** 3, W.x ** 2
    first = next(iter(bound_schedule(P, Q, SCALARS)))
    assert first == (2, 3, 0)
    f = annihilate(P, Q)
    assert f.s_degree <= first[0] and f.t_degree <= first[1]


def test_schedule_minimality():
    """Every box visited before the returned one has no relation."""
    P, Q = QM.x ** 2, QM.y ** 2
    steps = list(bound_schedule(P, Q, POLY_COEFFS))
    assert steps[:3] == [(1, 2, 0), (2, 4, 1), (4, 8, 2)]
    for s, t, yb in steps[:2]:
        with pytest.raises(NotFound):
            annihilate(P, Q, POLY_COEFFS, s, t, yb)
    assert annihilate(P, Q, POLY_COEFFS) == annihilate(P, Q, POLY_COEFFS, *steps[2])


def test_env_cap(monkeypatch):
    monkeypatch.setenv("OREBC_MAX_CAP", "2")
    with pytest.raises(NotFound) as info:
        annihilate(QM.x ** 2, QM.y ** 2)
    assert info.value.bounds == (2, 2, 0)


def test_lame_pair_over_rational_functions():
    """x^2 - 2/y^2 and x^3 - 3/y^2 x + 3/y^3 commute and satisfy M^2 = L^3."""
    A = weyl(coeff_ring="ratfunc")
    inv = lambda k: RatFunc(Poly.one(QQ), y ** k)
    L = A.x ** 2 + A(inv(2) * -2)
    M = A.x ** 3 + (A.x).scale(inv(2) * -3) + A(inv(3) * 3)
    assert L * M == M * L
    f = annihilate(L, M, SCALARS, max_s=3, max_t=L.degree)
    assert f == S3_T2
    assert verify(f, L, M)


@pytest.mark.parametrize("seed", range(5))
def test_rank_bound_shape_weyl_ratfunc(seed):
    """Commuting pairs over k(y) are annihilated with t-degree <= deg P."""
    rng = random.Random(seed)
    A = weyl(coeff_ring="ratfunc")
    Wd = A.elem([RatFunc(Poly(QQ, [rng.randint(1, 3), 1]), Poly(QQ, [0, 1])), 1])
    g = random_scalar_poly(rng, QQ, 1, 2)
    h = random_scalar_poly(rng, QQ, 1, 3)
    P, Q = poly_in(Wd, g), poly_in(Wd, h)
    f = annihilate(P, Q, SCALARS, max_s=len(h) - 1, max_t=P.degree)
    assert verify(f, P, Q)
    assert f.t_degree <= P.degree


def test_root_of_unity_prime_field():
    F = FieldSpec.prime(5)
    A = qweyl(4, F)  # q = -1 is a primitive square root of unity
    P, Q = A.x ** 2, A.y ** 2
    assert P * Q == Q * P
    with pytest.raises(NotFound):
        annihilate(P, Q, SCALARS, 6, 6, 0)
    f = annihilate(P, Q, POLY_COEFFS, 1, 1, 2)
    assert verify(f, P, Q)
    assert f == BivarPoly(F, {(0, 1): 1, (0, 0): Poly(F, [0, 0, -1])}, POLY_COEFFS)


def test_cube_root_of_unity():
    F = FieldSpec.prime(7)
    A = qweyl(2, F)  # 2^3 = 8 = 1 mod 7
    P, Q = A.x ** 3, A.y ** 3
    assert P * Q == Q * P
    with pytest.raises(NotFound):
        annihilate(P, Q, SCALARS, 4, 4, 0)
    assert verify(annihilate(P, Q, POLY_COEFFS, 1, 1, 3), P, Q)


def test_poly_mode_evaluation_matches_verify():
    f = annihilate(QM.x ** 2, QM.y ** 2, POLY_COEFFS, 1, 1, 2)
    assert not eval_bivar(f, QM.x ** 2, QM.y ** 2)


@pytest.mark.parametrize("seed", range(8))
def test_polynomials_in_common_element(seed):
    rng = random.Random(100 + seed)
    A = power([0, 0, 1], rng.choice([0, 1, [0, 1]]))
    Wd = random_elem(rng, A, 1, 1, nonzero=True, min_x=1)
    g = random_scalar_poly(rng, QQ, 1, 2)
    h = random_scalar_poly(rng, QQ, 1, 2)
    P, Q = poly_in(Wd, g), poly_in(Wd, h)
    f = annihilate(P, Q, SCALARS, len(h) - 1, len(g) - 1, 0)
    assert f and verify(f, P, Q)
