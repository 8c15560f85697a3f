"""Isometry testing for definite lattices.

Backtracking in the style of Plesken-Souvignier: images of a reduced
basis are chosen among short vectors of the other lattice, pruned by
norms, by pairings with the images already chosen, and by a per-vector
fingerprint (the multiset of (norm, pairing) values against all short
vectors).  Pairing tables use numpy int64 arrays; every candidate answer
is re-verified in exact arithmetic.
"""

from fractions import Fraction

import numpy as np

from ..exactcore.linalg import congruence, det_bareiss, inverse, mat_mul, to_ints, vec_mat
from ..exactcore.lll import lll_reduce_int
from .enumerate import _prepared


class _ShortData:
    """Short vectors of a positive definite integral gram up to a bound."""

    def __init__(self, G, bound):
        self.G = G
        self.bound = bound
        prep = _prepared(G)
        pairs = [(vec_mat(y, prep.U), val) for y, val in prep.search(bound) if any(y)]
        pairs.sort()
        self.vectors = [tuple(x) for x, _ in pairs]
        self.norms = np.array([int(v) for _, v in pairs], dtype=np.int64)
        if self.vectors:
            S = np.array(self.vectors, dtype=np.int64)
            Gn = np.array(G, dtype=np.int64)
            self.SG = S @ Gn
            self.P = self.SG @ S.T
        else:
            self.SG = np.zeros((0, len(G)), dtype=np.int64)
            self.P = np.zeros((0, 0), dtype=np.int64)
        self._fps = None
        hist = {}
        for v in self.norms.tolist():
            hist[v] = hist.get(v, 0) + 1
        self.histogram = tuple(sorted(hist.items()))

    def _code(self, pairings):
        base = 2 * int(self.bound) + 1
        return self.norms * (4 * base * base) + pairings

    def fingerprints(self):
        if self._fps is None:
            if len(self.vectors) == 0:
                self._fps = []
            else:
                codes = self._code(self.P)
                codes.sort(axis=1)
                self._fps = [row.tobytes() for row in codes]
        return self._fps

    def fingerprint_of(self, x):
        """Fingerprint of an arbitrary lattice vector x."""
        xs = np.array(x, dtype=np.int64)
        pair = self.SG @ xs
        codes = np.sort(self._code(pair))
        return codes.tobytes()

    def spectrum(self):
        """Isometry invariant: sorted multiset of all fingerprints."""
        return tuple(sorted(self.fingerprints()))


def _positive_int_gram(L):
    G = L.gram
    if G and G[0][0] < 0:
        G = [[-a for a in row] for row in G]
    return to_ints(G)


class IsometryTester:
    """Caches short-vector data per lattice so repeated tests are cheap."""

    def __init__(self):
        self._cache = {}

    def data(self, G, bound):
        key = (tuple(tuple(r) for r in G), bound)
        d = self._cache.get(key)
        if d is None:
            d = _ShortData(G, bound)
            self._cache[key] = d
        return d

    def test(self, L1, L2):
        """U with U * G1 * U^T = G2, or None when not isometric."""
        if L1.rank != L2.rank or L1.det != L2.det:
            return None
        if L1.rank == 0:
            return []
        s1 = L1.gram[0][0] > 0
        s2 = L2.gram[0][0] > 0
        if s1 != s2:
            return None
        U = self.test_grams(_positive_int_gram(L1), _positive_int_gram(L2))
        if U is None:
            return None
        G1f = [[Fraction(a) for a in row] for row in L1.gram]
        if congruence(U, G1f) != L2.gram or abs(det_bareiss(U)) != 1:
            raise ArithmeticError("isometry verification failed")
        return U

    def test_grams(self, G1, G2):
        """Same as ``test`` for positive definite integer Gram matrices of
        equal determinant, skipping the exact determinant comparison."""
        R2, U2 = lll_reduce_int(G2)
        n = len(G1)
        bound = max(R2[i][i] for i in range(n))
        d1 = self.data(G1, bound)
        d2 = _ShortData(R2, bound)
        if d1.histogram != d2.histogram:
            return None
        fps1 = d1.fingerprints()
        basis_fps = []
        for i in range(n):
            e = [0] * n
            e[i] = 1
            basis_fps.append(d2.fingerprint_of(e))
        cands = []
        for i in range(n):
            want = R2[i][i]
            fp = basis_fps[i]
            idx = [a for a in range(len(d1.vectors)) if d1.norms[a] == want and fps1[a] == fp]
            if not idx:
                return None
            cands.append(idx)
        W = _backtrack(R2, d1, cands)
        if W is None:
            return None
        U = to_ints(mat_mul(inverse(U2), W))
        if congruence(U, G1) != G2:
            raise ArithmeticError("isometry verification failed")
        return U


def _backtrack(R2, d1, cands):
    n = len(R2)
    order = sorted(range(n), key=lambda i: (len(cands[i]), i))
    P = d1.P
    chosen = {}

    def rec(depth):
        if depth == n:
            return True
        i = order[depth]
        prev = [(j, chosen[j]) for j in order[:depth]]
        for a in cands[i]:
            if a in chosen.values():
                continue
            ok = True
            for j, b in prev:
                if P[a, b] != R2[i][j]:
                    ok = False
                    break
            if not ok:
                continue
            chosen[i] = a
            if rec(depth + 1):
                return True
            del chosen[i]
        return False

    if not rec(0):
        return None
    W = [list(d1.vectors[chosen[i]]) for i in range(n)]
    if det_bareiss(W) == 0:
        return None
    return W


_DEFAULT = IsometryTester()


def isometry_test(L1, L2, tester=None):
    """Return U with U * G1 * U^T = G2 if the definite lattices are isometric."""
    return (tester or _DEFAULT).test(L1, L2)
