"""Exact LLL reduction of a definite Gram matrix.

Integral variant working with the subdeterminants d_i and the scaled
Gram-Schmidt coefficients lambda_{k,j} = d_{j} * mu_{k,j}, so every
intermediate quantity is an integer and comparisons are exact.
"""

from fractions import Fraction

from ..errors import IndefiniteInput
from .linalg import common_denominator, identity, congruence

DELTA = Fraction(99, 100)


def lll_reduce(G, positive_definite=True, delta=DELTA):
    """Return (reduced gram, U) with U * G * U^T = reduced gram.

    A negative definite input is negated internally and the reduced gram
    negated back.  Raises IndefiniteInput when a Gram-Schmidt pivot of the
    wrong sign shows up.
    """
    n = len(G)
    if n == 0:
        return [], []
    sign = -1 if (not positive_definite or Fraction(G[0][0]) < 0) else 1
    den = common_denominator(G)
    B = [[int(Fraction(a) * den * sign) for a in row] for row in G]
    U = _lll_integral(B, delta)
    reduced = congruence(U, [[Fraction(a) for a in row] for row in G])
    return [[Fraction(a) for a in row] for row in reduced], U


def lll_reduce_int(G, delta=DELTA):
    """Integer-only variant for a positive definite integer Gram matrix."""
    if not G:
        return [], []
    U = _lll_integral(G, delta)
    return congruence(U, G), U


def _lll_integral(B, delta):
    n = len(B)
    B = [list(row) for row in B]
    H = identity(n)
    dn, dd = delta.numerator, delta.denominator
    lam = [[0] * n for _ in range(n)]
    d = [0] * (n + 1)
    d[0] = 1
    if B[0][0] <= 0:
        raise IndefiniteInput("gram matrix is not definite")
    d[1] = B[0][0]
    k, kmax = 1, 0

    def redi(k, l):
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = _round_div(lam[k][l], d[l + 1])
            H[k] = [a - q * b for a, b in zip(H[k], H[l])]
            # b_k -= q b_l on the gram: row then column
            B[k] = [a - q * b for a, b in zip(B[k], B[l])]
            for row in B:
                row[k] -= q * row[l]
            lam[k][l] -= q * d[l + 1]
            for i in range(l):
                lam[k][i] -= q * lam[l][i]

    def swapi(k):
        H[k], H[k - 1] = H[k - 1], H[k]
        B[k], B[k - 1] = B[k - 1], B[k]
        for row in B:
            row[k], row[k - 1] = row[k - 1], row[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lm = lam[k][k - 1]
        Bnew = (d[k - 1] * d[k + 1] + lm * lm) // d[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lm * t) // d[k]
            lam[i][k - 1] = (Bnew * t + lm * lam[i][k]) // d[k + 1]
        d[k] = Bnew

    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k + 1):
                u = B[k][j]
                for i in range(j):
                    u = (d[i + 1] * u - lam[k][i] * lam[j][i]) // d[i]
                if j < k:
                    lam[k][j] = u
                else:
                    if u <= 0:
                        raise IndefiniteInput("gram matrix is not definite")
                    d[k + 1] = u
        redi(k, k - 1)
        # Lovasz: d_{k+1} d_{k-1} >= delta d_k^2 - lam^2
        if dd * (d[k + 1] * d[k - 1] + lam[k][k - 1] ** 2) < dn * d[k] ** 2:
            swapi(k)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                redi(k, l)
            k += 1
    return H


def _round_div(a, b):
    """Nearest integer to a/b for b > 0 (ties away from zero)."""
    return (2 * a + b) // (2 * b)


def is_lll_reduced(G, delta=DELTA):
    """Size condition |mu| <= 1/2 and Lovasz condition, checked exactly."""
    n = len(G)
    G = [[Fraction(a) for a in row] for row in G]
    if G and G[0][0] < 0:
        G = [[-a for a in row] for row in G]
    mu = [[Fraction(0)] * n for _ in range(n)]
    Bs = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            s = G[i][j] - sum(mu[j][k] * mu[i][k] * Bs[k] for k in range(j))
            mu[i][j] = s / Bs[j]
        Bs[i] = G[i][i] - sum(mu[i][k] ** 2 * Bs[k] for k in range(i))
        if Bs[i] <= 0:
            return False
    for i in range(n):
        for j in range(i):
            if abs(mu[i][j]) > Fraction(1, 2):
                return False
    for i in range(1, n):
        if Bs[i] < (delta - mu[i][i - 1] ** 2) * Bs[i - 1]:
            return False
    return True
