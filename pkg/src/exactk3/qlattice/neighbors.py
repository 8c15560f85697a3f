"""Kneser p-neighbours, neighbour-closure genus enumeration, and the
action of isometries on the discriminant group."""

from fractions import Fraction
from itertools import product

from ..errors import NoIsotropicVector, NotAnIsometry
from ..exactcore.linalg import congruence, hnf, mat_mul, to_fractions, vec_mat
from ..exactcore.lll import lll_reduce_int
from .enumerate import norm_histogram
from .isometry import IsometryTester
from .lattice import QuadLattice, discriminant_group, genus_fingerprint


def _projective_points(n, p):
    """Representatives of P^{n-1}(F_p): first nonzero coordinate equals 1."""
    for lead in range(n):
        for tail in product(range(p), repeat=n - lead - 1):
            yield (0,) * lead + (1,) + tail


def isotropic_lines(G, p):
    """Vectors x mod p (one per line) with x.G.x = 0 mod p."""
    n = len(G)
    out = []
    for x in _projective_points(n, p):
        w = [sum(x[i] * G[i][j] for i in range(n)) for j in range(n)]
        if sum(a * b for a, b in zip(w, x)) % p == 0:
            out.append(list(x))
    return out


def neighbor(G, x, p):
    """Integer Gram and basis (rows over Q, in the coordinates of G) of the p-neighbour
    L(x, p) = {y : y.x = 0 mod p} + Z x'/p, where x' = x mod p has x'.x' = 0 mod 2p^2."""
    n = len(G)
    w = [sum(x[i] * G[i][j] for i in range(n)) % p for j in range(n)]
    j = next((k for k in range(n) if w[k]), None)
    if j is None:
        raise ValueError("x lies in the radical mod p")
    qx = sum(a * b for a, b in zip([sum(x[i] * G[i][k] for i in range(n)) for k in range(n)], x))
    if qx % p:
        raise ValueError("x is not isotropic mod p")
    c = (-(qx // p) * pow(2 * w[j], -1, p)) % p
    xp = list(x)
    xp[j] += p * c
    w = [sum(xp[i] * G[i][k] for i in range(n)) % p for k in range(n)]
    inv = pow(w[j], -1, p)
    rows = []
    for i in range(n):
        if i == j:
            continue
        r = [0] * n
        r[i] = p
        r[j] = -p * ((w[i] * inv) % p)
        rows.append(r)
    r = [0] * n
    r[j] = p * p
    rows.append(r)
    rows.append(list(xp))
    H = [r for r in hnf(rows) if any(r)]
    scaled = congruence(H, G)
    p2 = p * p
    if any(a % p2 for row in scaled for a in row):
        raise ArithmeticError("neighbour is not integral")
    gram = [[a // p2 for a in row] for row in scaled]
    return gram, [[Fraction(a, p) for a in r] for r in H]


def kneser_neighbors_and_genus(L, p, max_classes=1000, invariant_bound=None):
    """Representatives of the classes reached from L by iterated p-neighbour
    steps, pairwise non-isometric, starting with L itself.

    L must be even and definite and p an odd prime not dividing det L.
    The returned lattices carry the sign of L.
    """
    if not L.is_even():
        raise ValueError("neighbour construction needs an even lattice")
    if p == 2 or L.det.numerator % p == 0:
        raise ValueError("p must be odd and coprime to det")
    sign = 1 if L.is_positive_definite() else -1
    if sign == -1 and not L.is_negative_definite():
        raise ValueError("lattice must be definite")
    G0 = [[sign * a for a in row] for row in L.int_gram()]
    fp0 = genus_fingerprint(QuadLattice(G0))
    R0, _ = lll_reduce_int(G0)
    if invariant_bound is None:
        invariant_bound = max(R0[i][i] for i in range(len(R0)))
    tester = IsometryTester()
    reps = [R0]
    hists = [norm_histogram(R0, invariant_bound)]
    lines = isotropic_lines(R0, p)
    if not lines:
        raise NoIsotropicVector(f"no isotropic vector mod {p}")
    k = 0
    while k < len(reps):
        G = reps[k]
        for x in isotropic_lines(G, p) if k else lines:
            N, _ = neighbor(G, x, p)
            if any(N[i][i] % 2 for i in range(len(N))):
                raise ArithmeticError("neighbour is not even")
            R, _ = lll_reduce_int(N)
            h = norm_histogram(R, invariant_bound)
            known = False
            for rep, hh in zip(reps, hists):
                if hh == h and tester.test_grams(rep, R) is not None:
                    known = True
                    break
            if not known:
                if genus_fingerprint(QuadLattice(R)) != fp0:
                    raise ArithmeticError("neighbour left the genus")
                reps.append(R)
                hists.append(h)
                if len(reps) > max_classes:
                    raise ArithmeticError("too many classes")
        k += 1
    return [QuadLattice([[sign * a for a in row] for row in R]) for R in reps]


# discriminant action ----------------------------------------------------------

class DiscActionSubgroup:
    """Subgroup of Aut(L^dual/L) generated by induced maps of isometries.

    Elements are k x k integer matrices acting on coordinate rows, column j
    reduced mod the j-th invariant factor.
    """

    def __init__(self, disc, generators, cap=100000):
        self.disc = disc
        self.generators = [self._normal(g) for g in generators]
        k = len(disc.invariant_factors)
        one = self._normal([[int(i == j) for j in range(k)] for i in range(k)])
        seen = {one}
        frontier = [one]
        while frontier:
            nxt = []
            for a in frontier:
                for g in self.generators:
                    b = self._mul(a, g)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
                        if len(seen) > cap:
                            raise ArithmeticError("subgroup closure cap exceeded")
            frontier = nxt
        self.elements = frozenset(seen)

    def _normal(self, A):
        d = self.disc.invariant_factors
        return tuple(tuple(int(A[i][j]) % d[j] for j in range(len(d))) for i in range(len(d)))

    def _mul(self, A, B):
        k = len(A)
        return self._normal([[sum(A[i][m] * B[m][j] for m in range(k)) for j in range(k)]
                             for i in range(k)])

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, A):
        return self._normal(A) in self.elements

    def __le__(self, other):
        return self.elements <= other.elements

    def __eq__(self, other):
        return isinstance(other, DiscActionSubgroup) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)


def induced_disc_map(L, M, disc=None):
    """Matrix of the action x -> x*M on the discriminant group generators."""
    M = to_fractions(M)
    if congruence(M, L.gram) != L.gram:
        raise NotAnIsometry("matrix does not preserve the Gram matrix")
    disc = disc or discriminant_group(L)
    return [list(disc.coordinates(vec_mat(list(g), M))) for g in disc.generators]


def disc_action_subgroup(L, isometries, disc=None):
    disc = disc or discriminant_group(L)
    maps = [induced_disc_map(L, M, disc) for M in isometries]
    return DiscActionSubgroup(disc, maps)


def isometry_order(M, cap=10000):
    """Multiplicative order of a square matrix, or None beyond the cap."""
    M = to_fractions(M)
    n = len(M)
    one = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    P = M
    for k in range(1, cap + 1):
        if P == one:
            return k
        P = mat_mul(P, M)
    return None
