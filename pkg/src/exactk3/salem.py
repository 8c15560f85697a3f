"""Salem polynomials: exact certification by Sturm sequences, dyadic root
bisection, unit-circle tests and spectral radius checks for integer
matrices."""

import math
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import NotMonic, ZeroConstantTerm
from .exactcore.factor import squarefree_decomposition
from .exactcore.linalg import charpoly_berkowitz, to_fractions
from .exactcore.poly import UniPoly, poly_gcd
from .exactcore.scalars import QQ


class RootInterval(NamedTuple):
    lo: Fraction
    hi: Fraction
    polynomial: tuple      # ascending integer coefficients

    def midpoint(self):
        return (self.lo + self.hi) / 2

    def __str__(self):
        return f"({float(self.lo):.8f}, {float(self.hi):.8f})"


class EntropyCheck(NamedTuple):
    divides: bool
    cofactor_on_circle: Optional[bool]
    radius: Optional[RootInterval]
    cofactor: Optional[UniPoly]


def as_poly(f):
    """Ascending integer list (or UniPoly) to a UniPoly over QQ in x."""
    if isinstance(f, UniPoly):
        return UniPoly(QQ, [Fraction(c) for c in f.coeffs], "x")
    return UniPoly(QQ, [Fraction(c) for c in f], "x")


def int_coeffs(f):
    return tuple(int(c) for c in as_poly(f).coeffs)


def _check_input(f, allow_constant=False):
    f = as_poly(f)
    if f.degree() < (0 if allow_constant else 1) or f.lc() != 1:
        raise NotMonic("polynomial must be monic of positive degree")
    if f.coeff(0) == 0:
        raise ZeroConstantTerm("constant term vanishes")
    if any(c.denominator != 1 for c in f.coeffs):
        raise ValueError("coefficients must be integers")
    return f


# Sturm machinery --------------------------------------------------------------

def sturm_sequence(f):
    seq = [f, f.derivative()]
    while seq[-1].degree() > 0:
        r = seq[-2] % seq[-1]
        if not r:
            break
        seq.append(-r)
    return seq


def _sign_changes(values):
    signs = [v for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def _values_at(seq, x):
    if x == math.inf:
        return [p.lc() for p in seq]
    if x == -math.inf:
        return [p.lc() * (-1) ** p.degree() for p in seq]
    return [p(x) for p in seq]


def count_distinct_roots(f, lo=-math.inf, hi=math.inf, seq=None):
    """Number of distinct real roots of f in (lo, hi]."""
    f = as_poly(f)
    if f.degree() <= 0:
        return 0
    seq = seq or sturm_sequence(f)
    return _sign_changes(_values_at(seq, lo)) - _sign_changes(_values_at(seq, hi))


def count_roots_with_multiplicity(f, lo=-math.inf, hi=math.inf):
    """Real roots of f in (lo, hi] counted with multiplicity."""
    total = 0
    for g, m in squarefree_decomposition(as_poly(f).monic()):
        total += m * count_distinct_roots(g, lo, hi)
    return total


def squarefree(f):
    f = as_poly(f)
    return (f // poly_gcd(f, f.derivative())).monic()


# reciprocal structure -----------------------------------------------------------

def is_reciprocal(f):
    f = as_poly(f)
    return f.reverse() == f


def trace_polynomial(f):
    """g with f(x) = x^m g(x + 1/x) for a reciprocal f of degree 2m."""
    f = as_poly(f)
    n = f.degree()
    if n % 2 or not is_reciprocal(f):
        raise ValueError("trace polynomial needs an even reciprocal polynomial")
    m = n // 2
    y = UniPoly.gen(QQ, "x")
    T = [UniPoly.constant(QQ, 2, "x"), y]
    for _ in range(2, m + 1):
        T.append(y * T[-1] - T[-2])
    g = UniPoly.constant(QQ, f.coeff(m), "x")
    for k in range(1, m + 1):
        g = g + T[k].scale(f.coeff(m + k))
    return g


def _strip_unit_roots(f):
    """Divide out every factor x - 1 and x + 1."""
    for r in (1, -1):
        lin = UniPoly(QQ, [Fraction(-r), Fraction(1)], "x")
        while f.degree() > 0 and f(Fraction(r)) == 0:
            f = f.exact_div(lin)
    return f


# root isolation -------------------------------------------------------------------

def _cauchy_bound(f):
    lc = abs(f.lc())
    return 1 + max(abs(c) / lc for c in f.coeffs[:-1])


def isolate_root(f, lo, hi, width=Fraction(1, 10 ** 6)):
    """Dyadic bisection of the unique root of f's squarefree part in (lo, hi]."""
    g = squarefree(f)
    seq = sturm_sequence(g)
    lo, hi = Fraction(lo), Fraction(hi)
    if count_distinct_roots(g, lo, hi, seq) != 1:
        raise ValueError("interval does not isolate exactly one root")
    while hi - lo >= width:
        mid = (lo + hi) / 2
        if g(mid) == 0:
            q = (hi - lo) / 4
            return RootInterval(mid - q / 2 ** 20, mid + q / 2 ** 20, int_coeffs(f))
        if count_distinct_roots(g, lo, mid, seq) == 1:
            hi = mid
        else:
            lo = mid
    return RootInterval(lo, hi, int_coeffs(f))


def is_salem(f, width=Fraction(1, 10 ** 6)):
    """(True, interval around the root > 1) for a Salem polynomial, else (False, None).

    The trace polynomial must have all its roots real, exactly one of them
    (simple) in (2, oo) and the rest in [-2, 2].
    """
    f = _check_input(f)
    n = f.degree()
    if n % 2 or not is_reciprocal(f):
        return False, None
    m = n // 2
    g = trace_polynomial(f)
    if count_roots_with_multiplicity(g) != m:
        return False, None
    if count_roots_with_multiplicity(g, -math.inf, Fraction(-2)) != 0:
        return False, None
    two = Fraction(2)
    outside = [(h, k) for h, k in squarefree_decomposition(g.monic())
               if count_distinct_roots(h, two, math.inf)]
    if len(outside) != 1 or outside[0][1] != 1 or count_distinct_roots(outside[0][0], two, math.inf) != 1:
        return False, None
    if g(two) == 0 and count_roots_with_multiplicity(g, two, math.inf) != 1:
        return False, None
    hi = Fraction(1)
    bound = _cauchy_bound(f)
    while hi < bound:
        hi *= 2
    return True, isolate_root(f, Fraction(1), hi, width)


def unit_circle_factor_test(f):
    """True iff every complex root of f lies on the unit circle."""
    f = _check_input(f, allow_constant=True)
    r = _strip_unit_roots(f)
    if r.degree() == 0:
        return True
    if r.degree() % 2 or not is_reciprocal(r):
        return False
    g = trace_polynomial(r)
    m = g.degree()
    return count_roots_with_multiplicity(g, Fraction(-2), Fraction(2)) == m


def matrix_entropy_check(M, salem):
    """Does the Salem polynomial divide charpoly(M), with a cofactor whose
    roots all lie on the unit circle?  Radius is the Salem root interval."""
    s = _check_input(salem)
    cp = as_poly(charpoly_berkowitz(to_fractions(M)))
    q, r = divmod(cp, s)
    if r:
        return EntropyCheck(False, None, None, None)
    on_circle = unit_circle_factor_test(q)
    radius = None
    if on_circle:
        ok, radius = is_salem(s)
        if not ok:
            raise ValueError("divisor is not a Salem polynomial")
    return EntropyCheck(True, on_circle, radius, q)


def companion_matrix(f):
    """Companion matrix (row convention) of a monic polynomial."""
    f = as_poly(f)
    n = f.degree()
    C = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n - 1):
        C[i][i + 1] = Fraction(1)
    for j in range(n):
        C[n - 1][j] = -f.coeff(j)
    return C


def spectral_radius_decimal(interval, digits=6):
    return round(float(interval.midpoint()), digits)
