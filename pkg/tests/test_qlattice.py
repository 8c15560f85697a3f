import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from exactk3.errors import NoIsotropicVector, NonIntegralOverlattice, NotAnIsometry
from exactk3.exactcore.linalg import det_bareiss, mat_mul, transpose
from exactk3.qlattice import (QuadLattice, discriminant_group, enumerate_vectors, genus_fingerprint,
                              induced_disc_map, invariant_coinvariant, isometry_order, isometry_test,
                              kneser_neighbors_and_genus, lattice_invariants, lattice_minimum,
                              overlattice, vectors_in_range)

A2 = [[2, -1], [-1, 2]]
E8 = [[2, -1, 0, 0, 0, 0, 0, 0], [-1, 2, -1, 0, 0, 0, 0, 0], [0, -1, 2, -1, 0, 0, 0, -1],
      [0, 0, -1, 2, -1, 0, 0, 0], [0, 0, 0, -1, 2, -1, 0, 0], [0, 0, 0, 0, -1, 2, -1, 0],
      [0, 0, 0, 0, 0, -1, 2, 0], [0, 0, -1, 0, 0, 0, 0, 2]]


def random_definite_gram(rng, n):
    while True:
        B = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        if det_bareiss(B):
            return mat_mul(B, transpose(B))


def box_norms(G, radius):
    n = len(G)
    pts = np.array(list(itertools.product(range(-radius, radius + 1), repeat=n)), dtype=np.int64)
    Gn = np.array(G, dtype=np.int64)
    return pts, np.einsum("ij,jk,ik->i", pts, Gn, pts)


def test_enumeration_matches_brute_force_box():
    rng = random.Random(20240611)
    radius = 5
    for _ in range(1000):
        n = rng.randint(1, 4)
        G = random_definite_gram(rng, n)
        bound = min(G[i][i] for i in range(n)) * 2
        found = {tuple(x) for x, v in vectors_in_range(QuadLattice(G), bound)}
        pts, norms = box_norms(G, radius)
        brute = {tuple(int(a) for a in p) for p in pts[norms <= bound]}
        in_box = {x for x in found if max(abs(int(a)) for a in x) <= radius}
        assert in_box == brute
        for x in found:
            assert QuadLattice(G).norm(list(x)) <= bound


def test_enumerate_folds_sign():
    vl = enumerate_vectors(QuadLattice(A2), 2)
    assert len(vl.vectors) == 3 and vl.vectors[0][0] >= 0


def test_negative_definite_minimum():
    L = QuadLattice([[-a for a in row] for row in E8])
    assert lattice_minimum(L) == -2
    assert len(enumerate_vectors(L, -2).vectors) == 120


def test_e8_invariants():
    L = QuadLattice(E8)
    inv = lattice_invariants(L)
    assert L.det == 1 and L.is_even() and inv.signature == (8, 0)
    assert discriminant_group(L).order == 1


def test_discriminant_group_of_a1():
    disc = discriminant_group(QuadLattice([[2]]))
    assert disc.invariant_factors == (2,)
    assert disc.q_values == (Fraction(1, 2),)


def test_overlattice_glue():
    L = QuadLattice([[2, 0], [0, 2]])
    with pytest.raises(NonIntegralOverlattice):
        overlattice(L, [[Fraction(1, 2), 0]])
    M = overlattice(L, [[Fraction(1, 2), Fraction(1, 2)]], require_even=False)
    assert M.det == 1


def test_invariant_coinvariant_of_swap():
    L = QuadLattice([[-2, 0], [0, -2]])
    inv, co = invariant_coinvariant(L, [[0, 1], [1, 0]])
    assert inv.rank == 1 and co.rank == 1
    assert inv.gram == [[-4]] and co.gram == [[-4]]


def test_induced_map_requires_isometry():
    with pytest.raises(NotAnIsometry):
        induced_disc_map(QuadLattice([[2, 0], [0, 4]]), [[0, 1], [1, 0]])


def test_isometry_order():
    assert isometry_order([[0, 1], [1, 0]]) == 2
    assert isometry_order([[1, 1], [0, 1]], cap=50) is None


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6))
def test_isometry_test_finds_transform(seed):
    rng = random.Random(seed)
    G = random_definite_gram(rng, 3)
    U = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    for _ in range(4):
        i, j = rng.sample(range(3), 2)
        c = rng.choice((-1, 1))
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]
    G2 = mat_mul(mat_mul(U, G), transpose(U))
    V = isometry_test(QuadLattice(G), QuadLattice(G2))
    assert V is not None
    assert mat_mul(mat_mul(V, [list(map(Fraction, r)) for r in G]), transpose(V)) == G2


def test_non_isometric_lattices():
    assert isometry_test(QuadLattice([[2, 0], [0, 2]]), QuadLattice([[2, 1], [1, 2]])) is None


def test_kneser_rejects_anisotropic_prime():
    with pytest.raises(NoIsotropicVector):
        kneser_neighbors_and_genus(QuadLattice([[2, 0], [0, 8]]), 3)


def test_kneser_single_class_genus():
    # 2(x^2 + y^2 + z^2): one class in its genus
    reps = kneser_neighbors_and_genus(QuadLattice([[2, 0, 0], [0, 2, 0], [0, 0, 2]]), 3)
    assert len(reps) == 1


def test_genus_fingerprint_is_isometry_invariant():
    G = QuadLattice(A2)
    H = QuadLattice([[2, 1], [1, 2]])
    assert genus_fingerprint(G) == genus_fingerprint(H)
