import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from exactk3.exactcore import (GF, QQ, NumberField, RationalFunctionField, UniPoly,
                               det_bareiss, factor_mod_p, hnf_with_transform, is_lll_reduced,
                               is_probable_prime, lll_reduce, poly_xgcd, resultant,
                               roots_in_field, snf_with_transforms, squarefree_decomposition)
from exactk3.exactcore.codec import decode_matrix, decode_poly, encode_matrix, encode_poly
from exactk3.exactcore.linalg import det_charpoly, identity, inverse, mat_mul
from exactk3.errors import NotPrime

small = st.integers(-6, 6)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


def test_prime_field_rejects_composite():
    with pytest.raises(NotPrime):
        GF(91)
    assert is_probable_prime(113) and not is_probable_prime(1)


@given(st.integers(1, 112), st.integers(0, 112))
def test_prime_field_inverse_and_sqrt(a, b):
    F = GF(113)
    x = F(a)
    assert x * x.inverse() == F.one()
    y = F(b) * F(b)
    r = y.sqrt()
    assert r * r == y


@given(st.lists(st.integers(-9, 9), min_size=4, max_size=4).filter(any))
def test_number_field_inverse(cs):
    K = NumberField([1, 0, 0, 0, 1], "z")
    x = K(cs)
    assert x * x.inverse() == K.one()


def test_number_field_generator_order():
    K = NumberField([1, 0, 0, 0, 1], "z")
    z = K.gen()
    assert z ** 8 == K.one() and z ** 4 == -K.one()


@given(st.lists(small, min_size=1, max_size=6), st.lists(small, min_size=1, max_size=6))
def test_xgcd_bezout(a, b):
    f, g = UniPoly(QQ, a), UniPoly(QQ, b)
    d, s, t = poly_xgcd(f, g)
    assert s * f + t * g == d
    if d:
        assert d.divides(f) and d.divides(g)


def test_resultant_detects_common_root():
    x = UniPoly.gen(QQ, "x")
    assert resultant((x - 1) * (x + 2), (x - 1) * (x + 5)) == 0
    assert resultant(x - 1, x + 1) != 0


@settings(max_examples=40)
@given(st.lists(st.integers(0, 112), min_size=2, max_size=8))
def test_factor_mod_p_multiplies_back(cs):
    F = GF(113)
    f = UniPoly(F, [F(c) for c in cs] + [F.one()])
    prod = UniPoly.constant(F, f.lc(), f.var)
    for g, k in factor_mod_p(f):
        prod = prod * g ** k
    assert prod == f


def test_squarefree_decomposition():
    x = UniPoly.gen(QQ, "x")
    f = (x - 1) ** 3 * (x + 2)
    parts = dict((k, g) for g, k in squarefree_decomposition(f))
    assert parts[3] == x - 1 and parts[1] == x + 2


def test_roots_in_field_with_candidates():
    K = NumberField([-2, 0, 1], "r")
    r = K.gen()
    f = UniPoly(K, [K(-2), K(0), K(1)], "x")
    found = roots_in_field(f, [r, -r, K.one()])
    assert sorted(repr(a) for a, _ in found.roots) == sorted([repr(r), repr(-r)])


@settings(max_examples=60)
@given(square(4))
def test_det_agrees_with_charpoly(M):
    det, cp = det_charpoly(M)
    assert det == det_bareiss(M)
    assert cp.lc() == 1 and cp.coeff(0) == det     # det(xI - M) at x = 0, even size


@settings(max_examples=60)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=3, max_size=3))
def test_smith_form(M):
    D, U, V = snf_with_transforms(M)
    assert mat_mul(mat_mul(U, M), V) == D
    diag = [D[i][i] for i in range(3)]
    for a, b in zip(diag, diag[1:]):
        assert b == 0 or (a != 0 and b % a == 0)
    assert abs(det_bareiss(U)) == 1 and abs(det_bareiss(V)) == 1


@settings(max_examples=60)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=4, max_size=4))
def test_hermite_form(M):
    H, U = hnf_with_transform(M)
    assert mat_mul(U, M) == H
    assert abs(det_bareiss(U)) == 1


@settings(max_examples=40)
@given(st.integers(0, 10 ** 6))
def test_lll_reduces_positive_definite(seed):
    rng = random.Random(seed)
    n = 4
    B = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(n)]
    if det_bareiss(B) == 0:
        return
    G = mat_mul(B, [list(r) for r in zip(*B)])
    R, U = lll_reduce(G)
    assert is_lll_reduced(R)
    assert det_bareiss(R) == det_bareiss(G)
    assert abs(det_bareiss(U)) == 1


def test_rational_function_arithmetic():
    F = RationalFunctionField(QQ, "t")
    t = F.gen()
    f = (t ** 2 - 1) / (t - 1)
    assert f == t + 1 and f.is_polynomial()
    assert (1 / t).compose(t + 1) == 1 / (t + 1)


def test_codec_round_trip():
    M = [[Fraction(1, 3), Fraction(-2)], [Fraction(0), Fraction(7, 5)]]
    assert decode_matrix(encode_matrix(M)) == M
    K = NumberField([1, 0, 1], "i")
    f = UniPoly(K, [K([1, 2]), K([0, Fraction(1, 2)])])
    assert decode_poly(encode_poly(f), K) == f


def test_inverse_of_identity():
    assert inverse(identity(3)) == identity(3)
