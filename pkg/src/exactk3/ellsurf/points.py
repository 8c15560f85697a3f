"""Sections of an elliptic surface: points of the generic fibre over K(t)."""

from dataclasses import dataclass
from typing import Optional

from ..errors import NotOnCurve, UnsupportedForm
from ..exactcore.poly import UniPoly
from ..exactcore.ratfunc import RatFunc


@dataclass(frozen=True)
class SurfaceSection:
    """Affine point (x, y) over K(t); ``ZERO`` is the symbolic zero section."""

    x: Optional[RatFunc]
    y: Optional[RatFunc]
    torsion: Optional[int] = None

    @property
    def is_zero(self):
        return self.x is None

    def __eq__(self, other):
        if not isinstance(other, SurfaceSection):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash(None) if self.is_zero else hash((self.x, self.y))

    def __repr__(self):
        if self.is_zero:
            return "SurfaceSection(O)"
        return f"SurfaceSection(x={self.x!r}, y={self.y!r})"


ZERO = SurfaceSection(None, None, 1)


def section(W, x, y, check=True):
    """Build a section on W from anything the function field accepts."""
    P = SurfaceSection(_coerce(W, x), _coerce(W, y))
    if check:
        check_on_curve(W, P)
    return P


def _coerce(W, c):
    F = W.F
    if isinstance(c, RatFunc):
        return c
    if isinstance(c, UniPoly):
        return F(c)
    if isinstance(c, (list, tuple)):
        return F(UniPoly(W.base, c, F.var))
    return F(c)


def check_on_curve(W, P):
    if P.is_zero:
        return P
    if not W.on_curve(P.x, P.y):
        raise NotOnCurve("coordinates do not satisfy the Weierstrass equation")
    return P


def negate(W, P):
    if P.is_zero:
        return P
    return SurfaceSection(P.x, -P.y - W.a1 * P.x - W.a3)


def add(W, P, Q):
    """Chord-tangent addition on the long Weierstrass form."""
    check_on_curve(W, P)
    check_on_curve(W, Q)
    if P.is_zero:
        return Q
    if Q.is_zero:
        return P
    a1, a2, a3, a4, a6 = W.coeffs
    if P.x == Q.x:
        if P.y + Q.y + a1 * Q.x + a3 == W.F.zero():
            return ZERO
        lam = (P.x * P.x * 3 + a2 * P.x * 2 + a4 - a1 * P.y) / (P.y * 2 + a1 * P.x + a3)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    nu = P.y - lam * P.x
    x3 = lam * lam + a1 * lam - a2 - P.x - Q.x
    y3 = -(lam + a1) * x3 - nu - a3
    return SurfaceSection(x3, y3)


def subtract(W, P, Q):
    return add(W, P, negate(W, Q))


def multiply(W, n, P):
    if n < 0:
        return multiply(W, -n, negate(W, P))
    R, B = ZERO, P
    while n:
        if n & 1:
            R = add(W, R, B)
        B = add(W, B, B)
        n >>= 1
    return R


def translate_by_origin_torsion(W, P):
    """Translation by (0, 0) on y^2 = x^3 + A x: (x, y) -> (A/x, -A y / x^2)."""
    if not W.is_short() or W.a6:
        raise UnsupportedForm("closed-form translation needs y^2 = x^3 + A x")
    if P.is_zero:
        return SurfaceSection(W.F.zero(), W.F.zero())
    if not P.x:
        return ZERO
    A = W.a4
    return SurfaceSection(A / P.x, -(A * P.y) / (P.x * P.x))


def two_torsion(W):
    """Non-zero 2-torsion sections of y^2 = x^3 + A x."""
    if not W.is_short() or W.a6:
        raise UnsupportedForm("two-torsion enumeration needs y^2 = x^3 + A x")
    zero = W.F.zero()
    out = [SurfaceSection(zero, zero, 2)]
    r = _sqrt_ratfunc(-W.a4)
    if r is not None:
        out += [SurfaceSection(r, zero, 2), SurfaceSection(-r, zero, 2)]
    return out


def _sqrt_ratfunc(f):
    """Square root in K(t) for polynomial f, or None."""
    if not f.is_polynomial():
        return None
    p = f.num
    if p.degree() % 2:
        return None
    lead = _sqrt_scalar(p.lc())
    if lead is None:
        return None
    # coefficient-by-coefficient square root from the top down
    n = p.degree() // 2
    base = p.base
    r = [base.zero()] * (n + 1)
    r[n] = lead
    two_lead = lead * 2
    for k in range(n - 1, -1, -1):
        acc = p.coeff(n + k)
        for i in range(k + 1, n):
            j = n + k - i
            if k < j <= n:
                acc = acc - r[i] * r[j]
        r[k] = acc / two_lead
    cand = UniPoly(base, r, p.var)
    if cand * cand != p:
        return None
    return f.field(cand)


def _sqrt_scalar(c):
    from fractions import Fraction
    from math import isqrt

    from ..exactcore.scalars import Fp
    if isinstance(c, Fp):
        p = c.field.p
        v = int(c.v) % p
        if v == 0:
            return c
        if pow(v, (p - 1) // 2, p) != 1:
            return None
        for a in range(p):
            if a * a % p == v:
                return c.field(a)
    if isinstance(c, Fraction):
        if c < 0:
            return None
        n, d = isqrt(c.numerator), isqrt(c.denominator)
        if n * n == c.numerator and d * d == c.denominator:
            return Fraction(n, d)
        return None
    if hasattr(c, "is_rational") and c.is_rational():
        r = _sqrt_scalar(c.c[0])
        return None if r is None else c.field(r)
    return None


def substitute_base(W, P, mu):
    """Coordinates of P composed with a base substitution t -> mu(t)."""
    if P.is_zero:
        return P
    return SurfaceSection(P.x.compose(mu), P.y.compose(mu))


def pushforward_under_scaling(W, P, zeta):
    """Image of P under (x, y, t) -> (x, y, zeta t): s(t) -> s(t / zeta)."""
    F = W.F
    mu = F.gen() * (W.base.one() / W.base(zeta))
    return substitute_base(W, P, mu)


def base_involution(W, P):
    """Image of P under epsilon: (x, y, t) -> (x, y, -t)."""
    return substitute_base(W, P, -W.F.gen())


def point_arithmetic(W, P, Q=None, op="add"):
    """Dispatch over the supported operations by name."""
    ops = {
        "add": lambda: add(W, P, Q),
        "sub": lambda: subtract(W, P, Q),
        "neg": lambda: negate(W, P),
        "translate": lambda: translate_by_origin_torsion(W, P),
        "epsilon": lambda: base_involution(W, P),
    }
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    return ops[op]()
