"""Exact dense linear algebra on lists of rows.

Matrices are lists of lists.  Integer routines (HNF, SNF, kernels) take
``int`` entries; the rest accept ``Fraction`` or any field elements.
"""

from fractions import Fraction
from math import gcd

from ..errors import SingularMatrix
from .poly import UniPoly
from .scalars import QQ


def identity(n, one=1, zero=0):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def zeros(r, c, zero=0):
    return [[zero] * c for _ in range(r)]


def transpose(M):
    return [list(col) for col in zip(*M)] if M else []


def mat_mul(A, B):
    Bt = list(zip(*B))
    out = []
    for row in A:
        nz = [(k, a) for k, a in enumerate(row) if a]
        out_row = []
        for col in Bt:
            acc = 0
            for k, a in nz:
                b = col[k]
                if b:
                    acc = acc + a * b
            out_row.append(acc)
        out.append(out_row)
    return out


def vec_mat(v, M):
    """Row vector times matrix."""
    n = len(M[0]) if M else 0
    out = [0] * n
    for a, row in zip(v, M):
        if a:
            for j, b in enumerate(row):
                if b:
                    out[j] = out[j] + a * b
    return out


def mat_vec(M, v):
    out = []
    for row in M:
        acc = 0
        for a, b in zip(row, v):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out


def dot(u, v):
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


def bilinear(u, G, v):
    return dot(vec_mat(u, G), v)


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, c):
    return [[a * c for a in row] for row in A]


def mat_pow(A, n):
    result = identity(len(A))
    base = A
    while n:
        if n & 1:
            result = mat_mul(result, base)
        n >>= 1
        if n:
            base = mat_mul(base, base)
    return result


def congruence(U, G):
    """U * G * U^T."""
    return mat_mul(mat_mul(U, G), transpose(U))


def to_fractions(M):
    return [[Fraction(a) for a in row] for row in M]


def is_integral(M):
    return all(Fraction(a).denominator == 1 for row in M for a in row)


def to_ints(M):
    out = []
    for row in M:
        r = []
        for a in row:
            a = Fraction(a)
            if a.denominator != 1:
                raise ValueError("matrix is not integral")
            r.append(a.numerator)
        out.append(r)
    return out


def common_denominator(M):
    d = 1
    for row in M:
        for a in row:
            q = Fraction(a).denominator
            d = d * q // gcd(d, q)
    return d


def _check_square(M):
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    return n


def det_bareiss(M):
    """Fraction-free determinant (exact division in the entry domain)."""
    n = _check_square(M)
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not A[k][k]:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0 * A[0][0]
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                num = akk * row_i[j] - aik * row_k[j]
                row_i[j] = num // prev if isinstance(num, int) and isinstance(prev, int) else num / prev
            row_i[k] = 0
        prev = akk
    return sign * A[n - 1][n - 1]


def charpoly_berkowitz(M):
    """Ascending coefficient list of det(x*I - M), division free."""
    n = _check_square(M)
    if n == 0:
        return [1]
    # Berkowitz: build Toeplitz products for leading principal submatrices
    vect = [1, -M[0][0]]
    for r in range(1, n):
        # partition of the (r+1)x(r+1) leading block
        R = [M[r][j] for j in range(r)]
        C = [M[i][r] for i in range(r)]
        A = [row[:r] for row in M[:r]]
        a = M[r][r]
        # q_k = R * A^k * C for k = 0..r-1
        q = []
        AkC = list(C)
        for _ in range(r):
            q.append(dot(R, AkC))
            AkC = mat_vec(A, AkC)
        col = [1, -a] + [-x for x in q]
        # Toeplitz (r+2) x (r+1) lower triangular with first column col
        new = []
        for i in range(r + 2):
            acc = 0
            for j in range(min(i, r) + 1):
                if i - j < len(col):
                    acc = acc + col[i - j] * vect[j]
            new.append(acc)
        vect = new
    # vect holds descending coefficients of the monic charpoly
    return list(reversed(vect))


def det_charpoly(M):
    """(determinant, monic characteristic polynomial as UniPoly over QQ)."""
    n = _check_square(M)
    F = to_fractions(M)
    cp = charpoly_berkowitz(F)
    det = det_bareiss(F)
    assert det == (-1) ** n * cp[0], "determinant and charpoly disagree"
    return det, UniPoly(QQ, cp, "x")


def _gauss_jordan(M, rhs_cols):
    """Row reduce [M | rhs]; return reduced augmented part or raise."""
    n = _check_square(M)
    A = [list(M[i]) + list(rhs_cols[i]) for i in range(n)]
    width = len(A[0]) if A else 0
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k]), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        A[k], A[piv] = A[piv], A[k]
        inv = 1 / A[k][k]
        A[k] = [a * inv for a in A[k]]
        rowk = A[k]
        for i in range(n):
            if i != k and A[i][k]:
                f = A[i][k]
                rowi = A[i]
                A[i] = [rowi[j] - f * rowk[j] if rowk[j] else rowi[j] for j in range(width)]
    return [row[n:] for row in A]


def _to_field(M):
    sample = next((a for row in M for a in row if not isinstance(a, (int, Fraction))), None)
    if sample is None:
        return to_fractions(M)
    field = sample.field
    return [[field(a) for a in row] for row in M]


def inverse(M):
    M = _to_field(M)
    n = len(M)
    one = M[0][0] ** 0 if n else 1
    zero = one * 0
    return _gauss_jordan(M, identity(n, one, zero))


def solve_or_invert(M, rhs=None):
    """Inverse of M, or the x with M x = rhs.  Verified by substitution."""
    M = _to_field(M)
    if rhs is None:
        inv = inverse(M)
        n = len(M)
        check = mat_mul(M, inv)
        if any(check[i][j] != (1 if i == j else 0) for i in range(n) for j in range(n)):
            raise ArithmeticError("inverse failed verification")
        return inv
    sol = [row[0] for row in _gauss_jordan(M, [[M[0][0] * 0 + b] for b in rhs])]
    if any(a != b for a, b in zip(mat_vec(M, sol), rhs)):
        raise ArithmeticError("solution failed verification")
    return sol


def solve_left(v, M):
    """x with x * M = v (M square nonsingular)."""
    return solve_or_invert(transpose(M), v)


def rref(M):
    """Reduced row echelon form over the fractions; returns (R, pivots)."""
    A = [[Fraction(a) if isinstance(a, int) else a for a in row] for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [a * inv for a in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def rank(M):
    if not M:
        return 0
    return len(rref(M)[1])


def right_kernel(M, ncols=None):
    """Basis of {v : M v = 0} over the rationals."""
    if not M:
        n = ncols or 0
        return identity(n, Fraction(1), Fraction(0))
    R, pivots = rref(M)
    n = len(M[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -R[i][f]
        basis.append(v)
    return basis


def clear_denominators(v):
    d = 1
    for a in v:
        q = Fraction(a).denominator
        d = d * q // gcd(d, q)
    w = [int(Fraction(a) * d) for a in v]
    g = 0
    for a in w:
        g = gcd(g, a)
    return [a // g for a in w] if g else w


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hnf_with_transform(M):
    """Row-style Hermite normal form: U * M = H, U unimodular.

    Nonzero rows of H come first, pivots positive, entries above a pivot
    reduced into [0, pivot).
    """
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        # combine all rows below r into a single pivot via extended gcd
        for i in range(r + 1, m):
            if A[i][c] == 0:
                continue
            a, b = A[r][c], A[i][c]
            g, x, y = _xgcd(a, b)
            ag, bg = a // g, b // g
            rr, ri = A[r], A[i]
            A[r] = [x * p + y * q for p, q in zip(rr, ri)]
            A[i] = [-bg * p + ag * q for p, q in zip(rr, ri)]
            ur, ui = U[r], U[i]
            U[r] = [x * p + y * q for p, q in zip(ur, ui)]
            U[i] = [-bg * p + ag * q for p, q in zip(ur, ui)]
        if A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-a for a in A[r]]
            U[r] = [-a for a in U[r]]
        piv = A[r][c]
        for i in range(r):
            q = A[i][c] // piv
            if q:
                A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                U[i] = [a - q * b for a, b in zip(U[i], U[r])]
        r += 1
    return A, U


def hnf(M):
    return hnf_with_transform(M)[0]


def integer_left_kernel(M):
    """Basis (rows) of {x in Z^m : x M = 0}; always saturated."""
    H, U = hnf_with_transform(M)
    return [U[i] for i in range(len(H)) if not any(H[i])]


def integer_row_basis(rows):
    """A basis of the Z-span of integer row vectors (HNF rows)."""
    H = hnf(rows)
    return [row for row in H if any(row)]


def saturate(rows, n=None):
    """Basis of (Q-span of rows) intersected with Z^n."""
    if not rows:
        return []
    n = len(rows[0])
    K = right_kernel(rows)
    if not K:
        return identity(n)
    Kint = [clear_denominators(v) for v in K]
    return integer_left_kernel(transpose(Kint))


def snf_with_transforms(M):
    """Smith normal form: (D, U, V) with U * M * V = D.

    Diagonal entries nonnegative with d1 | d2 | ...; U, V unimodular.
    """
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row dst -= q * row src
        A[dst] = [a - q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    for k in range(min(m, n)):
        while True:
            entries = [(abs(A[i][j]), i, j) for i in range(k, m) for j in range(k, n) if A[i][j]]
            if not entries:
                break
            _, pi, pj = min(entries)
            swap_rows(k, pi)
            swap_cols(k, pj)
            piv = A[k][k]
            done = True
            for i in range(k + 1, m):
                if A[i][k]:
                    add_row(i, k, A[i][k] // piv)
                    if A[i][k]:
                        done = False
            for j in range(k + 1, n):
                if A[k][j]:
                    add_col(j, k, A[k][j] // piv)
                    if A[k][j]:
                        done = False
            if not done:
                continue
            bad = next(((i, j) for i in range(k + 1, m) for j in range(k + 1, n) if A[i][j] % piv), None)
            if bad is None:
                break
            add_row(k, bad[0], -1)
        if k < m and k < n and A[k][k] < 0:
            A[k] = [-a for a in A[k]]
            U[k] = [-a for a in U[k]]
    return A, U, V


def invariant_factors(M):
    D, _, _ = snf_with_transforms(M)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def signature_of_symmetric(G):
    """(n_plus, n_minus, n_zero) by exact congruence diagonalization."""
    A = [[Fraction(a) for a in row] for row in G]
    n = len(A)
    plus = minus = 0
    for k in range(n):
        if A[k][k] == 0:
            j = next((j for j in range(k + 1, n) if A[j][j] != 0), None)
            if j is not None:
                A[k], A[j] = A[j], A[k]
                for row in A:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if A[k][j] != 0), None)
                if j is None:
                    continue
                A[k] = [a + b for a, b in zip(A[k], A[j])]
                for row in A:
                    row[k] += row[j]
        d = A[k][k]
        if d > 0:
            plus += 1
        else:
            minus += 1
        for i in range(k + 1, n):
            if A[i][k]:
                f = A[i][k] / d
                A[i] = [a - f * b for a, b in zip(A[i], A[k])]
                for row in A:
                    row[i] -= f * row[k]
    return plus, minus, n - plus - minus
