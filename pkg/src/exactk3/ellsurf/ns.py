"""Néron-Severi bases built from fibre, zero section, fibre components and
sections; Gram assembly, divisor classes and pushforward matrices."""

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import IsometryCheckFailed, NonIntegralClass, SingularGram
from ..exactcore.linalg import (
    congruence, det_bareiss, snf_with_transforms, solve_left, to_fractions,
)
from .intersect import (
    component_of_section_at, corrected_coincidence_intersection, section_intersections,
)
from .model import fiber_configuration
from .points import ZERO


@dataclass
class NSBasisSpec:
    """Ordered basis (e, o, a_1..a_k, s_1..s_m).

    ``components`` lists the places carrying a non-identity component, one
    entry per component (only two-component fibres are modelled), and
    ``sections`` the non-zero sections in order.
    """

    components: list
    sections: list
    overlattice: list = field(default_factory=list)

    @property
    def rank(self):
        return 2 + len(self.components) + len(self.sections)

    def labels(self):
        return (["e", "o"] + [f"a{i + 1}" for i in range(len(self.components))]
                + [f"s{i + 1}" for i in range(len(self.sections))])

    def component_index(self, place):
        return 2 + self.components.index(place)

    def section_index(self, i):
        return 2 + len(self.components) + i


def _config_lookup(W, basis, config):
    config = config or fiber_configuration(W, allow_partial=True)
    fibers = []
    for pl in basis.components:
        fd = config.at(pl)
        if fd is None:
            raise ValueError(f"no reducible fibre at {pl!r}")
        if fd.components != 2:
            raise ValueError("only fibres with two components are modelled")
        fibers.append(fd)
    return fibers


def section_pairings(W, basis, P, fibers, method="translation", config=None):
    """Intersection numbers of a section with every basis element.

    ``method`` selects how section-section numbers are obtained: by
    translation (P.Q = (P - Q).O) or from corrected coincidence degrees,
    which avoids group-law arithmetic and is much faster over number fields.
    """
    row = [1]
    if P.is_zero:
        row.append(-2)
        row += [0] * len(fibers)
    else:
        row.append(section_intersections(W, P, ZERO))
        row += [component_of_section_at(W, P, fd) for fd in fibers]
    for S in basis.sections:
        if S == P:
            row.append(-2)
        elif method == "coincidence" and not P.is_zero:
            row.append(corrected_coincidence_intersection(W, P, S, config))
        else:
            row.append(section_intersections(W, P, S))
    return row


def ns_gram_assemble(W, basis, config=None, method="translation"):
    config = config or fiber_configuration(W, allow_partial=True)
    fibers = _config_lookup(W, basis, config)
    n = basis.rank
    k = len(fibers)
    G = [[0] * n for _ in range(n)]
    G[0][1] = G[1][0] = 1
    G[1][1] = -2
    for i in range(k):
        G[2 + i][2 + i] = -2
    for j, S in enumerate(basis.sections):
        row = section_pairings(W, basis, S, fibers, method, config)
        c = basis.section_index(j)
        for i in range(n):
            G[c][i] = G[i][c] = row[i]
        G[c][c] = -2
    return G


def solve_class(gram, pairings, index=None, expect_norm=None):
    """v with v * G = pairings, optionally checked for norm and denominators."""
    G = to_fractions(gram)
    if det_bareiss(G) == 0:
        raise SingularGram("Gram matrix is singular")
    v = solve_left([Fraction(a) for a in pairings], G)
    if expect_norm is not None:
        norm = sum(v[i] * G[i][j] * v[j] for i in range(len(v)) for j in range(len(v)))
        if norm != expect_norm:
            raise ArithmeticError(f"class has norm {norm}, expected {expect_norm}")
    if index is not None and any(index % a.denominator for a in v):
        raise NonIntegralClass("class has denominators beyond the overlattice index")
    return v


def ns_class_of_divisor(W, basis, gram, D, index=2, config=None):
    """Class of a section, or of a fibre component given as (place, 0 | 1)."""
    fibers = _config_lookup(W, basis, config)
    n = basis.rank
    if isinstance(D, tuple):
        place, comp = D
        i = basis.component_index(place)
        v = [Fraction(0)] * n
        if comp:
            v[i] = Fraction(1)
        else:
            v[0], v[i] = Fraction(1), Fraction(-1)
        return v
    return solve_class(gram, section_pairings(W, basis, D, fibers), index, -2)


def build_pushforward_matrix(W, basis, gram, point_map, place_map, witness,
                             index=2, config=None):
    """Matrix (rows = images of basis elements) of the automorphism.

    ``point_map`` acts on sections, ``place_map`` sends a fibre place to
    the place of its image fibre and ``witness`` is a section meeting the
    non-identity component of every listed fibre; the component hit by its
    image decides where each non-identity component goes.
    """
    fibers = _config_lookup(W, basis, config)
    n = basis.rank
    rows = [[Fraction(int(i == 0)) for i in range(n)]]
    rows.append(ns_class_of_divisor(W, basis, gram, point_map(ZERO), index, config))
    image_witness = point_map(witness)
    for fd in fibers:
        if component_of_section_at(W, witness, fd) != 1:
            raise ValueError("witness misses the non-identity component")
        target = place_map(fd.place)
        tfd = fibers[basis.components.index(target)]
        comp = component_of_section_at(W, image_witness, tfd)
        rows.append(ns_class_of_divisor(W, basis, gram, (target, comp), index, config))
    for S in basis.sections:
        rows.append(ns_class_of_divisor(W, basis, gram, point_map(S), index, config))
    if congruence(rows, to_fractions(gram)) != to_fractions(gram):
        raise IsometryCheckFailed("pushforward does not preserve the Gram matrix")
    return rows


def change_to_overlattice(M, basis_rows):
    """Matrix of the same map in the coordinates of an overlattice basis."""
    from ..exactcore.linalg import inverse, mat_mul
    B = to_fractions(basis_rows)
    return mat_mul(mat_mul(B, to_fractions(M)), inverse(B))


@dataclass
class TrivialLatticeData:
    gram: list
    free_rank: int
    torsion: list

    def quotient_label(self):
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def trivial_lattice_and_mw(gram, ns_basis_rows, triv_indices):
    """Gram of the trivial lattice and the structure of NS / Triv.

    ``ns_basis_rows`` is a basis of NS in the ambient coordinates of ``gram``
    (e.g. an overlattice of the span of the basis); ``triv_indices`` pick
    out e, o and the fibre components among the ambient basis vectors.
    """
    G = to_fractions(gram)
    triv_gram = [[G[i][j] for j in triv_indices] for i in triv_indices]
    n = len(G)
    B = to_fractions(ns_basis_rows)
    coords = []
    for i in triv_indices:
        e = [Fraction(int(k == i)) for k in range(n)]
        c = solve_left(e, B) if len(B) == n else None
        if c is None or any(a.denominator != 1 for a in c):
            raise NonIntegralClass("trivial lattice vector is not in NS")
        coords.append([int(a) for a in c])
    D, _, _ = snf_with_transforms(coords)
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    rank_triv = sum(1 for d in diag if d)
    return TrivialLatticeData(triv_gram, len(B) - rank_triv, [d for d in diag if d > 1])
