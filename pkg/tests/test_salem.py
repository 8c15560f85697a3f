from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from exactk3.errors import NotMonic, ZeroConstantTerm
from exactk3.salem import (companion_matrix, count_distinct_roots, count_roots_with_multiplicity,
                           is_reciprocal, is_salem, isolate_root, matrix_entropy_check,
                           trace_polynomial, unit_circle_factor_test)

TAU8 = [1, 0, -1, -2, -1, 0, 1]
LEHMER = [1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]


def test_tau8_interval():
    ok, iv = is_salem(TAU8)
    assert ok and Fraction(158233, 100000) < iv.lo < iv.hi < Fraction(158235, 100000)


def test_lehmer_interval():
    ok, iv = is_salem(LEHMER)
    assert ok and Fraction(117627, 100000) < iv.lo < iv.hi < Fraction(117629, 100000)


def test_not_salem():
    assert not is_salem([1, 0, -3, 0, 1])[0]      # two real roots above 1
    assert not is_salem([1, 1, 1])[0]             # all roots on the circle


def test_unit_circle():
    assert unit_circle_factor_test([1, 1, 1])
    assert unit_circle_factor_test([1, 0, 0, 0, 1])
    assert not unit_circle_factor_test([-2, 1])


def test_input_validation():
    with pytest.raises(NotMonic):
        is_salem([1, 0, 2])
    with pytest.raises(ZeroConstantTerm):
        is_salem([0, 1, 1])


def test_trace_polynomial_of_tau8():
    g = trace_polynomial(TAU8)
    assert g.degree() == 3 and is_reciprocal(TAU8)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5))
def test_sturm_counts_real_roots_of_products(roots):
    f = [1]
    for r in roots:
        f = [(f[k - 1] if k else 0) - r * (f[k] if k < len(f) else 0) for k in range(len(f) + 1)]
    assert count_roots_with_multiplicity(f) == len(roots)
    assert count_distinct_roots(f) == len(set(roots))


def test_isolate_root_width():
    iv = isolate_root(TAU8, Fraction(3, 2), Fraction(2), width=Fraction(1, 10 ** 10))
    assert iv.hi - iv.lo <= Fraction(1, 10 ** 10)


def test_companion_entropy():
    r = matrix_entropy_check(companion_matrix(TAU8), TAU8)
    assert r.divides and r.cofactor_on_circle and r.cofactor.degree() == 0


def test_published_matrix_entropy(fx):
    r = matrix_entropy_check(fx.pushforward_f, fx.salem_polynomial("tau8"))
    assert r.divides and r.cofactor_on_circle and r.cofactor.degree() == 12
