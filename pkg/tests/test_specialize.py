from fractions import Fraction

import pytest

from exactk3.errors import NoDegreeOnePlace, NotAdmissible
from exactk3.exactcore import NumberField, QQ, RationalFunctionField, UniPoly
from exactk3.specialize import (ReductionMap, degree_one_roots, equivariance_check,
                                find_degree_one_place)


def test_published_root_reproduces_printed_sections(ctx):
    R = ctx.reduction
    assert (R.p, R.root) == (113, 43)
    assert [R.section(ctx.model_p, P) for P in ctx.sections_K] == ctx.sections_p


def test_smallest_root_is_default(fx):
    roots = degree_one_roots(fx.field, 113)
    assert len(roots) == 8 and find_degree_one_place(fx.field, 113).root == roots[0]
    assert degree_one_roots(fx.field, 41)


def test_inert_prime():
    with pytest.raises(NoDegreeOnePlace):
        find_degree_one_place(NumberField([1, 0, 1], "i"), 3)


def test_wrong_root_rejected(fx):
    with pytest.raises(ValueError):
        ReductionMap(fx.field, 113, 44)


def test_bad_denominator(ctx):
    with pytest.raises(NotAdmissible):
        ctx.reduction.scalar(Fraction(1, 113))
    F = RationalFunctionField(QQ, "t")
    f = F(UniPoly(QQ, [1]), UniPoly(QQ, [113, 0, 113]))
    with pytest.raises(NotAdmissible):
        ctx.reduction.ratfunc(f)


def test_reduction_is_a_ring_map(fx, ctx):
    K = fx.field
    R = ctx.reduction
    a, b = K([1, 2, 0, Fraction(1, 3)]), K([0, -1, 5])
    assert R.scalar(a * b) == R.scalar(a) * R.scalar(b)
    assert R.scalar(a + b) == R.scalar(a) + R.scalar(b)


def test_equivariance_report():
    rep = equivariance_check([("a", 1, 1), ("b", 2, 3)])
    assert not rep.ok and rep.entries[1][1] is False
