import random

import pytest

from exactk3.ellsurf import (ZERO, CoverFunctionField, MoebiusMap, WeierstrassModel, add,
                             admissible_moebius, component_of_section_at,
                             corrected_coincidence_intersection, fiber_configuration,
                             function_field_identity, generic_fiber_automorphisms,
                             kodaira_from_valuations, model_invariants, moebius_through, multiply,
                             negate, ns_class_of_divisor, quartic_to_weierstrass, section,
                             section_intersections, section_zero_intersection, subtract,
                             translate_by_origin_torsion, two_torsion, verify_round_trip)
from exactk3.errors import NotOnCurve, PointNotOnCurve, SingularQuartic
from exactk3.exactcore import GF, QQ


@pytest.mark.parametrize("vals, kind", [
    ((0, 0, 0), "I0"), ((0, 0, 3), "I3"), ((1, 1, 2), "II"), ((1, 2, 3), "III"),
    ((2, 2, 4), "IV"), ((2, 3, 6), "I0*"), ((2, 3, 8), "I2*"), ((3, 4, 8), "IV*"),
    ((3, 5, 9), "III*"), ((4, 5, 10), "II*"),
])
def test_kodaira_table(vals, kind):
    assert kodaira_from_valuations(*vals)[0] == kind


def test_invariant_identity():
    W = WeierstrassModel(QQ, [[1], [0, 1], [2], [0, 0, 1], [1, 1]])
    inv = model_invariants(W)
    assert inv.c4 ** 3 - inv.c6 ** 2 == inv.discriminant * 1728


def test_rational_surface_is_not_k3():
    W = WeierstrassModel.short(QQ, [0, 1], [])
    cfg = fiber_configuration(W)
    assert cfg.total_disc_degree == 12 and not cfg.is_k3


def test_published_fibration_over_fp(ctx):
    cfg = ctx.config_p
    assert cfg.is_k3
    assert sorted(f.kodaira for f in cfg.reducible()) == ["III"] * 8


def test_off_curve_point_rejected(ctx):
    with pytest.raises(NotOnCurve):
        section(ctx.model_p, [1], [1])


def _section_pool(ctx, rng, size=40):
    W = ctx.model_p
    gens = ctx.sections_p + [ctx.torsion_p]
    pool = []
    for _ in range(size):
        P = ZERO
        for s in rng.sample(gens, 2):
            P = add(W, P, s if rng.random() < 0.5 else negate(W, s))
        pool.append(P)
    return pool


def test_group_law_associative_200_triples(ctx):
    rng = random.Random(113)
    W = ctx.model_p
    pool = _section_pool(ctx, rng)
    for _ in range(200):
        P, Q, R = (rng.choice(pool) for _ in range(3))
        assert add(W, add(W, P, Q), R) == add(W, P, add(W, Q, R))


def test_group_law_basics(ctx):
    W = ctx.model_p
    P, Q = ctx.sections_p[:2]
    assert add(W, P, ZERO) == P
    assert add(W, P, negate(W, P)) == ZERO
    assert add(W, P, Q) == add(W, Q, P)
    assert multiply(W, 2, P) == add(W, P, P)
    assert subtract(W, add(W, P, Q), Q) == P
    T = ctx.torsion_p
    assert add(W, T, T) == ZERO
    assert translate_by_origin_torsion(W, translate_by_origin_torsion(W, P)) == P
    assert translate_by_origin_torsion(W, P) == add(W, P, T)


def test_two_torsion_of_published_model(ctx):
    zero = ctx.model_K.F.zero()
    assert [(P.x, P.y) for P in two_torsion(ctx.model_K)] == [(zero, zero)]


def test_intersections_match_gram(ctx):
    W, S, G = ctx.model_p, ctx.sections_p, ctx.G
    for i in range(8):
        assert section_zero_intersection(W, S[i]) == G[1][10 + i]
        for j in range(i + 1, 8):
            assert section_intersections(W, S[i], S[j]) == G[10 + i][10 + j]
            assert section_intersections(W, S[j], S[i]) == G[10 + i][10 + j]
            assert corrected_coincidence_intersection(W, S[i], S[j], ctx.config_p) == G[10 + i][10 + j]


def test_torsion_meets_non_identity_components(ctx):
    W = ctx.model_p
    assert all(component_of_section_at(W, ctx.torsion_p, fd) == 1 for fd in ctx.config_p.reducible())


def test_component_class(ctx):
    place = ctx.places_p[0]
    v = ns_class_of_divisor(ctx.model_p, ctx.basis_p, ctx.gram_p, (place, 1), config=ctx.config_p)
    assert v == [1 if k == 2 else 0 for k in range(18)]


def test_quartic_errors():
    with pytest.raises(SingularQuartic):
        quartic_to_weierstrass(QQ, [[0], [], [1], [], [1]], ([0], [0]))
    with pytest.raises(PointNotOnCurve):
        quartic_to_weierstrass(QQ, [[1], [], [], [], [1]], ([0], [2]))


def test_quartic_round_trip_over_q():
    coeffs = [[1], [], [], [], [1]]
    T = quartic_to_weierstrass(QQ, coeffs, ([0], [1]))
    assert T.model.j_invariant() == 1728
    assert verify_round_trip(T, coeffs)


def test_moebius_maps():
    F = GF(113)
    pts = [(F(0), F(1)), (F(1), F(1)), (F(1), F(0))]
    dst = [(F(5), F(1)), (F(1), F(0)), (F(7), F(1))]
    mu = moebius_through(pts, dst)
    assert [mu.on_point(p) for p in pts] == dst
    ident = mu.compose(mu.inverse())
    assert ident == MoebiusMap(F(1), F(0), F(0), F(1))


def test_admissible_moebius_contains_identity(ctx):
    F = ctx.Fp
    maps = admissible_moebius(ctx.model_p, ctx.model_p)
    one = MoebiusMap(F(1), F(0), F(0), F(1))
    assert any(mu == one and lifts for mu, lifts in maps)
    assert len(generic_fiber_automorphisms(ctx.model_p)) == 4


def test_function_field_equation(ctx):
    FF = CoverFunctionField.weierstrass(ctx.model_K)
    x, y, t = FF.gens()
    assert function_field_identity(FF, y * y, x ** 3 + (1 - t ** 8) * x)
    assert not function_field_identity(FF, y * y, x ** 3)
