import itertools

import pytest

from exactk3.errors import InfiniteSlice, NotInPositiveCone
from exactk3.hypgeo import (PolarizedLattice, is_ample_relative, reflect, separating_roots,
                            slice_vectors, span_rank)
from exactk3.qlattice import QuadLattice

# U + A1(-1): hyperbolic plane plus a (-2)-vector
U_A1 = [[0, 1, 0], [1, 0, 0], [0, 0, -2]]


def brute_slice(G, h, c, norm, radius=6):
    L = QuadLattice(G)
    out = []
    for x in itertools.product(range(-radius, radius + 1), repeat=len(G)):
        if L.pair(list(x), h) == c and L.norm(list(x)) == norm:
            out.append(list(x))
    return out


def test_slice_matches_brute_force():
    h = [1, 1, 0]
    P = PolarizedLattice(QuadLattice(U_A1), h)
    for c, norm in [(1, 0), (2, 0), (1, -2), (2, -2), (3, -2)]:
        got = sorted(list(map(int, x)) for x in slice_vectors(P, c, norm))
        assert got == sorted(brute_slice(U_A1, h, c, norm))


def test_infinite_slice_rejected():
    P = PolarizedLattice(QuadLattice(U_A1), [1, 1, 0])
    with pytest.raises(InfiniteSlice):
        slice_vectors(P, 0, 0)


def test_polarization_must_be_positive():
    with pytest.raises(NotInPositiveCone):
        PolarizedLattice(QuadLattice(U_A1), [1, -1, 0])


def test_reflection_moves_chamber():
    L = QuadLattice(U_A1)
    h = [1, 1, 0]
    P = PolarizedLattice(L, h)
    r = [1, 0, 1]
    h2 = [2, 1, 1]
    assert L.norm(r) == -2 and L.pair(r, h) > 0 > L.pair(r, h2)
    assert separating_roots(P, h) == []
    assert [list(map(int, x)) for x in separating_roots(P, h2)] == [r]
    assert reflect(L, h2, r) == h
    assert not is_ample_relative(P, h2)


def test_ample_relative():
    P = PolarizedLattice(QuadLattice(U_A1), [1, 1, 0])
    assert is_ample_relative(P, [2, 3, 0])
    assert not is_ample_relative(P, [0, 0, 1])


def test_published_slices(ctx):
    from exactk3.hypgeo import pairing_nonnegative_filter
    P = ctx.polarized
    assert len(slice_vectors(P, 1, 0)) == 0
    assert len(slice_vectors(P, 2, 0)) == 2
    D1 = slice_vectors(P, 1, -2)
    assert len(D1) == 32 and span_rank(D1) == 14
    assert len(slice_vectors(P, 2, -2, pairing_nonnegative_filter(ctx.NS, D1))) == 160
