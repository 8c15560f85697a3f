"""Fincke-Pohst enumeration of short and close vectors, integer only.

The quadratic form is written as sum_i D_i (y_i + t_i + sum_{j>i} q_ij (y_j + t_j))^2
after LLL pre-reduction.  All quantities are scaled to a common
denominator so the search tree is explored with Python integers only.
"""

from fractions import Fraction
from math import gcd, isqrt
from typing import NamedTuple

from ..errors import IndefiniteLattice
from ..exactcore.lll import lll_reduce, lll_reduce_int
from ..exactcore.linalg import inverse, vec_mat


class VectorList(NamedTuple):
    vectors: list
    sign_folded: bool


def _lcm(a, b):
    return a * b // gcd(a, b)


def _fp_coefficients(G):
    """(D, q) with q upper triangular: Cohen's quadratic decomposition."""
    n = len(G)
    Q = [[Fraction(a) for a in row] for row in G]
    for i in range(n):
        if Q[i][i] <= 0:
            raise IndefiniteLattice("form is not positive definite")
        for j in range(i + 1, n):
            Q[j][i] = Q[i][j]
            Q[i][j] = Q[i][j] / Q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                Q[k][l] -= Q[k][i] * Q[i][l]
    D = [Q[i][i] for i in range(n)]
    q = [[Q[i][j] if j > i else Fraction(0) for j in range(n)] for i in range(n)]
    return D, q


class _Prepared:
    """LLL-reduced positive definite form ready for repeated searches."""

    def __init__(self, G):
        if all(isinstance(a, int) for row in G for a in row):
            reduced, U = lll_reduce_int(G)
        else:
            reduced, U = lll_reduce(G, positive_definite=True)
        self.U = U
        self.Uinv = inverse(U)
        self.n = len(G)
        D, q = _fp_coefficients(reduced)
        self.Delta = 1
        for d in D:
            self.Delta = _lcm(self.Delta, d.denominator)
        self.delta = [int(d * self.Delta) for d in D]
        self.N = 1
        for row in q:
            for a in row:
                self.N = _lcm(self.N, a.denominator)
        self.m = [[int(a * self.N) for a in row] for row in q]

    def search(self, bound, center=None):
        """All (y, value) with Q(y + c) <= bound, y integral in reduced coords.

        ``center`` is a rational vector in reduced coordinates.
        """
        n = self.n
        t = [Fraction(0)] * n if center is None else [Fraction(a) for a in center]
        Nt = 1
        for a in t:
            Nt = _lcm(Nt, a.denominator)
        N = self.N
        M = N * Nt
        tM = [int(a * M) for a in t]          # M t_i
        tNt = [int(a * Nt) for a in t]        # Nt t_i
        scale = self.Delta * M * M
        top = bound * scale
        top = top.numerator // top.denominator if isinstance(top, Fraction) else int(top)
        if top < 0:
            return []
        delta, m = self.delta, self.m
        y = [0] * n
        z = [0] * n                            # Nt (y_j + t_j)
        out = []

        def level(i, budget):
            S = 0
            row = m[i]
            for j in range(i + 1, n):
                if row[j]:
                    S += row[j] * z[j]
            C = tM[i] + S
            W = isqrt(budget // delta[i])
            lo = -((W + C) // M)               # ceil((-W - C)/M)
            hi = (W - C) // M
            di = delta[i]
            for yi in range(lo, hi + 1):
                A = M * yi + C
                rest = budget - di * A * A
                if rest < 0:
                    continue
                y[i] = yi
                z[i] = Nt * yi + tNt[i]
                if i == 0:
                    out.append((list(y), top - rest))
                else:
                    level(i - 1, rest)

        level(n - 1, top)
        return [(yy, Fraction(acc, scale)) for yy, acc in out]

    def to_original(self, y, center=None):
        if center is None:
            return vec_mat(y, self.U)
        return vec_mat([a + b for a, b in zip(y, center)], self.U)


_CACHE = {}


def _prepared(G):
    key = tuple(tuple(r) for r in G)
    prep = _CACHE.get(key)
    if prep is None:
        prep = _Prepared(G)
        if len(_CACHE) > 256:
            _CACHE.clear()
        _CACHE[key] = prep
    return prep


def _oriented(L):
    """(sign, positive definite gram)."""
    if L.rank == 0:
        return 1, []
    if L.is_positive_definite():
        return 1, L.gram
    if L.is_negative_definite():
        return -1, [[-a for a in row] for row in L.gram]
    raise IndefiniteLattice("lattice is not definite")


def _fold(vectors):
    out = []
    for v in vectors:
        lead = next((a for a in v if a), 0)
        if lead > 0:
            out.append(v)
    return out


def _canonical(vs):
    return sorted(vs, key=lambda v: tuple(v))


def vectors_in_range(L, bound, offset=None):
    """All x in L + offset with 0 <= sign * x.x <= |bound| as (x, x.x).

    For a negative definite lattice ``bound`` is the most negative norm
    allowed (e.g. -4 returns norms in [-4, 0]).
    """
    sign, G = _oriented(L)
    prep = _prepared(G)
    center = None
    if offset is not None:
        center = vec_mat([Fraction(a) for a in offset], prep.Uinv)
    res = prep.search(Fraction(bound) * sign, center)
    out = []
    for y, val in res:
        x = prep.to_original(y, center)
        x = [int(a) if isinstance(a, Fraction) and a.denominator == 1 else a for a in x]
        out.append((x, sign * val))
    out.sort(key=lambda xv: tuple(xv[0]))
    return out


def enumerate_vectors(L, norm, offset=None):
    """All x in L + offset with x.x = norm, canonically ordered.

    Without an offset only the representative of +-x whose first nonzero
    coordinate is positive is kept, and the result says so.
    """
    norm = Fraction(norm)
    hits = [x for x, v in vectors_in_range(L, norm, offset) if v == norm]
    if offset is None or not any(Fraction(a) for a in offset):
        return VectorList(_canonical(_fold(hits)), True)
    return VectorList(_canonical(hits), False)


def short_vectors(L, bound):
    """Nonzero x with |x.x| <= |bound|, both signs, as (x, norm) pairs."""
    return [(x, v) for x, v in vectors_in_range(L, bound) if any(x)]


def norm_histogram(G, bound):
    """Counts of nonzero vectors by norm up to ``bound`` for a positive
    definite integer Gram matrix, as a sorted tuple of (norm, count)."""
    hist = {}
    for y, val in _prepared(G).search(bound):
        if any(y):
            hist[val] = hist.get(val, 0) + 1
    return tuple(sorted(hist.items()))


def lattice_minimum(L):
    """Smallest |x.x| over nonzero x, with the sign of the lattice.

    For a negative definite lattice this is the 'maximum' (e.g. -4).
    """
    sign, G = _oriented(L)
    prep = _prepared(G)
    bound = min(G[i][i] for i in range(len(G)))
    best = None
    for y, val in prep.search(bound):
        if any(y) and (best is None or val < best):
            best = val
    return sign * best
