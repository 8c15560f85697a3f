"""Quadratic lattices: invariants, enumeration, isometry testing, neighbors."""

from .lattice import (
    QuadLattice, LatticeIsometry, DiscGroup, GenusFingerprint, LatticeInvariants,
    discriminant_group, milgram_residue, lattice_invariants, genus_fingerprint,
    sublattice, orthogonal_complement, saturation, overlattice, change_basis,
    coordinates_in_basis, invariant_coinvariant, is_unimodular,
)
from .enumerate import (
    VectorList, enumerate_vectors, vectors_in_range, short_vectors, lattice_minimum,
    norm_histogram,
)
from .isometry import IsometryTester, isometry_test
from .neighbors import (
    kneser_neighbors_and_genus, neighbor, isotropic_lines, DiscActionSubgroup,
    induced_disc_map, disc_action_subgroup, isometry_order,
)

__all__ = [
    "QuadLattice", "LatticeIsometry", "DiscGroup", "GenusFingerprint", "LatticeInvariants",
    "discriminant_group", "milgram_residue", "lattice_invariants", "genus_fingerprint",
    "sublattice", "orthogonal_complement", "saturation", "overlattice", "change_basis",
    "coordinates_in_basis", "invariant_coinvariant", "is_unimodular",
    "VectorList", "enumerate_vectors", "vectors_in_range", "short_vectors", "lattice_minimum",
    "norm_histogram", "IsometryTester", "isometry_test",
    "kneser_neighbors_and_genus", "neighbor", "isotropic_lines", "DiscActionSubgroup",
    "induced_disc_map", "disc_action_subgroup", "isometry_order",
]
