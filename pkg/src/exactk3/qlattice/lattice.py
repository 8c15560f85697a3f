"""Quadratic lattices given by a Gram matrix, their invariants and
discriminant groups, and basic sublattice/overlattice constructions."""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from ..errors import DegenerateLattice, NonIntegralOverlattice, NotAnIsometry
from ..exactcore.linalg import (
    clear_denominators, common_denominator, congruence, det_bareiss, hnf, identity,
    integer_left_kernel, inverse, is_integral, mat_mul, mat_sub, rank,
    saturate, signature_of_symmetric, snf_with_transforms, to_fractions, to_ints,
    transpose, vec_mat, dot,
)


class QuadLattice:
    """Z^n with the bilinear form given by ``gram``.

    ``basis`` optionally records the rows of this lattice inside a parent
    lattice's coordinates (sublattices, complements, overlattices).
    """

    def __init__(self, gram, basis=None, allow_degenerate=False):
        G = to_fractions(gram)
        n = len(G)
        if any(len(row) != n for row in G):
            raise ValueError("gram matrix must be square")
        if any(G[i][j] != G[j][i] for i in range(n) for j in range(i)):
            raise ValueError("gram matrix must be symmetric")
        self.gram = G
        self.rank = n
        self.basis = basis
        self._det = det_bareiss(G) if n else Fraction(1)
        if self._det == 0 and not allow_degenerate:
            raise DegenerateLattice("gram matrix is singular")

    @property
    def det(self):
        return self._det

    def is_degenerate(self):
        return self._det == 0

    def is_integral(self):
        return is_integral(self.gram)

    def is_even(self):
        return self.is_integral() and all(self.gram[i][i].numerator % 2 == 0 for i in range(self.rank))

    def signature(self):
        p, m, _ = signature_of_symmetric(self.gram)
        return p, m

    def radical_rank(self):
        return signature_of_symmetric(self.gram)[2]

    def is_positive_definite(self):
        return self.rank > 0 and self.signature() == (self.rank, 0)

    def is_negative_definite(self):
        return self.rank > 0 and self.signature() == (0, self.rank)

    def norm(self, v):
        return dot(vec_mat(v, self.gram), v)

    def pair(self, u, v):
        return dot(vec_mat(u, self.gram), v)

    def scaled(self, c):
        c = Fraction(c)
        return QuadLattice([[a * c for a in row] for row in self.gram], self.basis,
                           allow_degenerate=self.is_degenerate())

    def int_gram(self):
        return to_ints(self.gram)

    def __repr__(self):
        return f"QuadLattice(rank={self.rank}, det={self._det})"


class LatticeIsometry:
    """Row action x -> x * matrix preserving the Gram matrix."""

    def __init__(self, lattice, matrix, check=True):
        M = to_fractions(matrix)
        if check and congruence(M, lattice.gram) != lattice.gram:
            raise NotAnIsometry("M * G * M^T differs from G")
        self.lattice = lattice
        self.matrix = M

    def is_integral(self):
        return is_integral(self.matrix)

    def __matmul__(self, other):
        return LatticeIsometry(self.lattice, mat_mul(self.matrix, other.matrix), check=False)


@dataclass(frozen=True)
class DiscGroup:
    invariant_factors: tuple
    generators: tuple          # dual vectors in lattice coordinates
    q_values: tuple            # q(g_i) in Q/2Z (None for odd lattices)
    pairings: tuple            # b(g_i, g_j) in Q/Z
    _gram: tuple
    _v: tuple                  # SNF column transform restricted to nontrivial factors

    @property
    def order(self):
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def coordinates(self, v):
        """Coordinates in Z/d_1 x ... of the dual vector v (lattice coords)."""
        w = vec_mat(v, [list(r) for r in self._gram])
        out = []
        for k, d in enumerate(self.invariant_factors):
            col = self._v[k]
            s = dot(w, col)
            s = Fraction(s)
            if s.denominator != 1:
                raise ValueError("vector is not in the dual lattice")
            out.append(s.numerator % d)
        return tuple(out)

    def elements(self):
        return product(*[range(d) for d in self.invariant_factors])

    def vector_of(self, coords):
        n = len(self._gram)
        v = [Fraction(0)] * n
        for c, g in zip(coords, self.generators):
            if c:
                v = [a + c * b for a, b in zip(v, g)]
        return v


@dataclass(frozen=True)
class GenusFingerprint:
    signature: tuple
    parity: str
    invariant_factors: tuple
    milgram_residue: object


@dataclass(frozen=True)
class LatticeInvariants:
    signature: tuple
    parity: str
    determinant: Fraction
    disc_group: object
    fingerprint: object


def discriminant_group(L):
    """L^dual / L via the Smith form of the integral Gram matrix."""
    if not L.is_integral():
        raise ValueError("discriminant group needs an integral lattice")
    if L.is_degenerate():
        raise DegenerateLattice("degenerate lattice has no finite discriminant group")
    G = L.int_gram()
    D, U, V = snf_with_transforms(G)
    n = L.rank
    diag = [D[i][i] for i in range(n)]
    keep = [i for i in range(n) if diag[i] > 1]
    Vinv = inverse(V)
    Ginv = inverse(L.gram)
    gens = []
    for i in keep:
        gens.append(tuple(vec_mat(Vinv[i], Ginv)))
    even = L.is_even()
    qv = []
    pr = []
    for i, g in enumerate(gens):
        if even:
            qv.append(L.norm(list(g)) % 2)
        row = []
        for h in gens:
            row.append(L.pair(list(g), list(h)) % 1)
        pr.append(tuple(row))
    cols = tuple(tuple(V[r][i] for r in range(n)) for i in keep)
    return DiscGroup(
        invariant_factors=tuple(diag[i] for i in keep),
        generators=tuple(gens),
        q_values=tuple(qv) if even else None,
        pairings=tuple(pr),
        _gram=tuple(tuple(r) for r in L.gram),
        _v=cols,
    )


def milgram_residue(L, disc=None):
    """Signature mod 8 of the discriminant form via its Gauss sum.

    Returns None for odd lattices.  The Gauss sum is evaluated in complex
    floating point and the phase is required to be within 1e-6 of a
    multiple of pi/4 with modulus sqrt|D|.
    """
    if not L.is_even():
        return None
    disc = disc or discriminant_group(L)
    qv, pr = disc.q_values, disc.pairings
    k = len(qv)
    counts = {}
    for coords in disc.elements():
        q = Fraction(0)
        for i in range(k):
            ci = coords[i]
            if ci:
                q += ci * ci * qv[i]
                for j in range(i + 1, k):
                    if coords[j]:
                        q += 2 * ci * coords[j] * pr[i][j]
        q %= 2
        counts[q] = counts.get(q, 0) + 1
    total = sum(c * cmath.exp(1j * math.pi * float(q)) for q, c in counts.items())
    mod = abs(total)
    if abs(mod - math.sqrt(disc.order)) > 1e-6 * max(1.0, mod):
        raise ArithmeticError("Gauss sum modulus mismatch")
    phase = cmath.phase(total) / (math.pi / 4)
    k = round(phase)
    if abs(phase - k) > 1e-6:
        raise ArithmeticError("Gauss sum phase is not an eighth root of unity")
    return k % 8


def lattice_invariants(L):
    if L.is_degenerate():
        raise DegenerateLattice("determinant is zero")
    sig = L.signature()
    if not L.is_integral():
        return LatticeInvariants(sig, "non-integral", L.det, None, None)
    parity = "even" if L.is_even() else "odd"
    disc = discriminant_group(L)
    mil = milgram_residue(L, disc)
    if mil is not None and mil != (sig[0] - sig[1]) % 8:
        raise ArithmeticError("Milgram residue disagrees with the signature")
    fp = GenusFingerprint(sig, parity, disc.invariant_factors, mil)
    return LatticeInvariants(sig, parity, L.det, disc, fp)


def genus_fingerprint(L):
    return lattice_invariants(L).fingerprint


# sublattice constructions ---------------------------------------------------

def sublattice(L, basis_rows, allow_degenerate=False):
    B = to_fractions(basis_rows)
    return QuadLattice(congruence(B, L.gram), basis=B, allow_degenerate=allow_degenerate)


def orthogonal_complement(L, vectors):
    """Primitive orthogonal complement of the given vectors inside L.

    The result may be degenerate when the span meets its own complement;
    ``radical_rank()`` on the returned lattice reports that case.
    """
    if not vectors:
        return sublattice(L, identity(L.rank))
    W = [vec_mat(v, L.gram) for v in vectors]
    W = [clear_denominators(w) for w in W]
    K = integer_left_kernel(transpose(W))
    return sublattice(L, K, allow_degenerate=True)


def saturation(L, vectors):
    """Primitive sublattice (Q-span of vectors) intersected with L."""
    rows = [clear_denominators(v) for v in vectors]
    return sublattice(L, saturate(rows), allow_degenerate=True)


def overlattice(L, extra, require_even=None):
    """L + Z*extra for rational vectors in L tensor Q.  Checks integrality
    (and evenness when L is even, or when require_even is set)."""
    rows = [list(map(Fraction, r)) for r in identity(L.rank)] + [list(map(Fraction, v)) for v in extra]
    den = common_denominator(rows)
    H = hnf([[int(a * den) for a in r] for r in rows])
    B = [[Fraction(a, den) for a in r] for r in H if any(r)]
    gram = congruence(B, L.gram)
    if not is_integral(gram):
        raise NonIntegralOverlattice("extended gram matrix is not integral")
    if require_even is None:
        require_even = L.is_even()
    if require_even and any(gram[i][i].numerator % 2 for i in range(len(gram))):
        raise NonIntegralOverlattice("extended lattice is not even")
    return QuadLattice(gram, basis=B)


def coordinates_in_basis(v, basis):
    """Solve x * basis = v for a square basis matrix."""
    from ..exactcore.linalg import solve_left
    return solve_left(list(map(Fraction, v)), basis)


def change_basis(M, basis):
    """Matrix of the row-action M (ambient coordinates) in the given basis."""
    B = to_fractions(basis)
    return mat_mul(mat_mul(B, to_fractions(M)), inverse(B))


def invariant_coinvariant(L, f):
    """(L^f, L_f) for an integral isometry f given on L's own basis."""
    M = f.matrix if isinstance(f, LatticeIsometry) else to_fractions(f)
    if congruence(M, L.gram) != L.gram:
        raise NotAnIsometry("not an isometry of the lattice")
    if not is_integral(M):
        raise ValueError("isometry is not integral in this basis")
    D = to_ints(mat_sub(M, identity(L.rank)))
    fixed = integer_left_kernel(D)
    inv = sublattice(L, fixed, allow_degenerate=True)
    co = orthogonal_complement(L, fixed) if fixed else sublattice(L, identity(L.rank))
    return inv, co


def is_unimodular(L):
    return L.is_integral() and abs(L.det) == 1


def rank_of(vectors):
    return rank([list(map(Fraction, v)) for v in vectors]) if vectors else 0
