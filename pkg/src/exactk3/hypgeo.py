"""Geometry of hyperbolic lattices of signature (1, n-1).

Affine slices {x : x.h = c, x^2 = norm} are reduced to close-vector
problems in the negative definite complement of h; separating roots
between two positive classes come from a finite sweep over the pairings
with both classes.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import InfiniteSlice, NoSolution, NotInPositiveCone, SearchCapExceeded
from .exactcore.linalg import (
    congruence, dot, hnf_with_transform, rank, solve_left, to_ints, vec_mat,
)
from .qlattice.enumerate import vectors_in_range
from .qlattice.lattice import QuadLattice


@dataclass
class PolarizedLattice:
    lattice: QuadLattice
    h: list

    def __post_init__(self):
        self.h = [Fraction(a) for a in self.h]
        n = self.lattice.rank
        if self.lattice.signature() != (1, n - 1):
            raise ValueError("lattice is not hyperbolic")
        if self.lattice.norm(self.h) <= 0:
            raise NotInPositiveCone("h^2 must be positive")
        if any(a.denominator != 1 for a in self.h):
            raise ValueError("h must be an integral vector")


def solve_integer_linear(W, target):
    """Integer x with x * W = target, plus a basis of the integer kernel.

    W is n x k with integer entries.  Returns (None, kernel) when target is
    not in the image.
    """
    H, U = hnf_with_transform(W)
    n = len(W)
    k = len(target)
    rk = sum(1 for row in H if any(row))
    z = [0] * n
    for i in range(rk):
        col = next(c for c in range(k) if H[i][c])
        rest = Fraction(target[col]) - sum(z[j] * H[j][col] for j in range(i))
        q = rest / H[i][col]
        if q.denominator != 1:
            return None, [U[i] for i in range(rk, n)]
        z[i] = int(q)
    if any(sum(z[j] * H[j][c] for j in range(rk)) != target[c] for c in range(k)):
        return None, [U[i] for i in range(rk, n)]
    x = [sum(z[j] * U[j][c] for j in range(rk)) for c in range(n)]
    return x, [U[i] for i in range(rk, n)]


class _AffineSolver:
    """Integer vectors x with prescribed pairings x.v_i = c_i and x^2 = norm,
    for a set of vectors v_i spanning a subspace whose orthogonal
    complement is negative definite."""

    def __init__(self, L, vectors):
        self.L = L
        self.vectors = [list(map(Fraction, v)) for v in vectors]
        self.W = [[a for a in col] for col in zip(*[_int_row(vec_mat(v, L.gram)) for v in self.vectors])]
        _, self.kernel = solve_integer_linear(self.W, [0] * len(vectors))
        self.K = QuadLattice(congruence(self.kernel, L.gram))
        if self.K.rank and not self.K.is_negative_definite():
            raise ValueError("complement is not negative definite")
        self.span_gram = [[L.pair(u, v) for v in self.vectors] for u in self.vectors]

    def _projection(self, pairings):
        """Vector in span(v_i) (Q-coefficients) with the given pairings."""
        coeffs = solve_left([Fraction(c) for c in pairings], self.span_gram)
        n = self.L.rank
        out = [Fraction(0)] * n
        for a, v in zip(coeffs, self.vectors):
            out = [o + a * b for o, b in zip(out, v)]
        return out

    def solve(self, pairings, norm):
        x0, _ = solve_integer_linear(self.W, list(pairings))
        if x0 is None:
            return None
        proj = self._projection(pairings)
        target = Fraction(norm) - self.L.norm(proj)
        if target > 0:
            return []
        if self.K.rank == 0:
            return [x0] if target == 0 else []
        perp = [a - b for a, b in zip(x0, proj)]
        rhs = [self.L.pair(perp, r) for r in self.kernel]
        offset = solve_left(rhs, self.K.gram)
        out = []
        for u, val in vectors_in_range(self.K, target, offset):
            if val != target:
                continue
            x = vec_mat(u, self.kernel)
            x = [p + a for p, a in zip(proj, x)]
            out.append([int(a) for a in x])
        return out


def _int_row(v):
    w = [Fraction(a) for a in v]
    if any(a.denominator != 1 for a in w):
        raise ValueError("pairing vector is not integral; lattice must be integral")
    return [int(a) for a in w]


def slice_vectors(P, c, norm, extra_filter=None):
    """All x in L with x.h = c and x^2 = norm, sorted lexicographically."""
    L = P.lattice
    if c == 0 and norm >= 0:
        raise InfiniteSlice("slice with c = 0 and non-negative norm is infinite")
    solver = _AffineSolver(L, [P.h])
    res = solver.solve([c], norm)
    if res is None:
        raise NoSolution(f"{c} is not in the image of x -> x.h")
    if extra_filter is not None:
        res = [x for x in res if extra_filter(x)]
    return sorted(res)


def span_rank(vectors):
    return rank([[Fraction(a) for a in v] for v in vectors]) if vectors else 0


def separating_roots(P, h2, cap=1000000):
    """Roots r (r^2 = -2) with r.h > 0 > r.h2.

    Writing a = r.h, b = r.h2, the projection of r to span(h, h2) has square
    Q(a, b) = (a, b) M^{-1} (a, b)^T with M the Gram matrix of (h, h2); the
    complement is negative definite, so Q(a, b) >= -2.  With det M < 0 this
    reads  h2^2 a^2 - 2 (h.h2) a b + h^2 b^2 <= 2 ((h.h2)^2 - h^2 h2^2),
    and for a > 0 > b every term on the left is non-negative, which bounds
    a and b.
    """
    L = P.lattice
    h = P.h
    h2 = [Fraction(a) for a in h2]
    hh = L.norm(h)
    hh2 = L.pair(h, h2)
    h2h2 = L.norm(h2)
    if h2h2 <= 0 or hh2 <= 0:
        raise NotInPositiveCone("h2 is not in the positive cone of h")
    det = hh * h2h2 - hh2 * hh2
    if det == 0:
        return []          # h2 is a positive multiple of h
    if det > 0:
        raise ArithmeticError("span(h, h2) is not hyperbolic")
    bound = -2 * det
    amax = isqrt(int(bound / h2h2))
    bmax = isqrt(int(bound / hh))
    pairs = []
    for a in range(1, amax + 1):
        for b in range(-bmax, 0):
            if h2h2 * a * a - 2 * hh2 * a * b + hh * b * b <= bound:
                pairs.append((a, b))
    if len(pairs) > cap:
        raise SearchCapExceeded(f"{len(pairs)} pairing pairs exceed the cap {cap}")
    solver = _AffineSolver(L, [h, h2])
    out = []
    for a, b in pairs:
        res = solver.solve([a, b], -2)
        if res:
            out.extend(res)
    return sorted(out)


def is_ample_relative(P, v):
    """True iff v lies in the same Weyl chamber as the ample class h."""
    L = P.lattice
    v = [Fraction(a) for a in v]
    if L.norm(v) <= 0 or L.pair(P.h, v) <= 0:
        return False
    return not separating_roots(P, v)


def reflect(L, v, r):
    """Reflection of v in the root r (r^2 = -2)."""
    c = L.pair(v, r)
    return [a + c * b for a, b in zip(v, r)]


def as_integer_vector(v):
    return to_ints([v])[0]


def pairing_nonnegative_filter(L, others):
    """Predicate x -> x.y >= 0 for every y in ``others``."""
    Ws = [vec_mat(list(map(Fraction, y)), L.gram) for y in others]

    def pred(x):
        return all(dot(x, w) >= 0 for w in Ws)
    return pred
