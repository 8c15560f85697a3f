"""Weierstrass isomorphisms, base change along Möbius maps of the t-line,
admissible Möbius maps and automorphisms of the generic fibre."""

from dataclasses import dataclass
from itertools import permutations

from ..errors import TooFewCriticalValues, UnsupportedForm
from ..exactcore.factor import roots_in_field, squarefree_decomposition
from ..exactcore.poly import UniPoly
from ..exactcore.ratfunc import RatFunc
from .model import WeierstrassModel, fiber_configuration


# n-th roots in K(t) ------------------------------------------------------------

def _scalar_root(base, c, n, candidates):
    """Over number fields only candidates and their pairwise products are tried."""
    f = UniPoly(base, [-c] + [base.zero()] * (n - 1) + [base.one()], "x")
    pool = list(candidates or ())
    pool += [a * b for i, a in enumerate(pool) for b in pool[i:]]
    roots = roots_in_field(f, pool)
    return roots.roots[0][0] if roots.roots else None


def poly_root(p, n, candidates=None):
    """r with r^n = p for a polynomial p over K, or None."""
    base = p.base
    lead = p.lc()
    c = _scalar_root(base, lead, n, candidates)
    if c is None:
        return None
    r = UniPoly.constant(base, c, p.var)
    if p.degree() == 0:
        return r
    for g, m in squarefree_decomposition(p.monic()):
        if m % n:
            return None
        r = r * g ** (m // n)
    return r if r ** n == p else None


def ratfunc_root(f, n, candidates=None):
    """r in K(t) with r^n = f, or None."""
    if not f:
        return f
    num = poly_root(f.num, n, candidates)
    if num is None:
        return None
    den = poly_root(f.den, n, candidates)
    if den is None:
        return None
    return f.field(num, den)


# Weierstrass isomorphisms ------------------------------------------------------

def transform_model(W, u, r, s, w):
    """Model obtained by x = u^2 x' + r, y = u^3 y' + s u^2 x' + w."""
    a1, a2, a3, a4, a6 = W.coeffs
    F = W.F
    u, r, s, w = (F(c) if not isinstance(c, RatFunc) else c for c in (u, r, s, w))
    b1 = (a1 + s * 2) / u
    b2 = (a2 - s * a1 + r * 3 - s * s) / u ** 2
    b3 = (a3 + r * a1 + w * 2) / u ** 3
    b4 = (a4 - s * a3 + r * a2 * 2 - (w + r * s) * a1 + r * r * 3 - s * w * 2) / u ** 4
    b6 = (a6 + r * a4 + r * r * a2 + r ** 3 - w * a3 - w * w - r * w * a1) / u ** 6
    return WeierstrassModel(W.base, [b1, b2, b3, b4, b6], F.var)


def to_short(W):
    """(short model, (r, s, w)) with W sent to y^2 = x^3 - c4/48 x - c6/864."""
    F = W.F
    b2, _, _, _ = W.b_invariants()
    r = -b2 / 12
    s = -W.a1 / 2
    w = -(W.a1 * r + W.a3) / 2
    return transform_model(W, F.one(), r, s, w), (r, s, w)


@dataclass(frozen=True)
class WeierstrassIsomorphism:
    u: RatFunc
    r: RatFunc
    s: RatFunc
    w: RatFunc

    def apply_to_point(self, x, y):
        """Coordinates on the target model of the point (x, y) on the source."""
        u, r, s, w = self.u, self.r, self.s, self.w
        xp = (x - r) / u ** 2
        yp = (y - s * u * u * xp - w) / u ** 3
        return xp, yp


def weierstrass_isomorphism(W1, W2, candidates=None):
    """(u, r, s, w) carrying W1 onto W2 over K(t), or None."""
    if W1.j_invariant() != W2.j_invariant():
        return None
    S1, (r, s, w) = to_short(W1)
    if not W2.is_short():
        raise UnsupportedForm("target must be a short Weierstrass model")
    A1, B1, A2, B2 = S1.a4, S1.a6, W2.a4, W2.a6
    if not B1:
        u = ratfunc_root(A1 / A2, 4, candidates)
    elif not A1:
        u = ratfunc_root(B1 / B2, 6, candidates)
    else:
        u2 = (B1 / B2) / (A1 / A2)
        u = ratfunc_root(u2, 2, candidates)
        if u is not None and u ** 4 != A1 / A2:
            u = None
    if u is None:
        return None
    iso = WeierstrassIsomorphism(u, r, s, w)
    if transform_model(W1, u, r, s, w) != W2:
        raise ArithmeticError("constructed isomorphism does not reach the target model")
    return iso


# Möbius maps -----------------------------------------------------------------

@dataclass(frozen=True)
class MoebiusMap:
    """t -> (a t + b) / (c t + d), stored up to scalar with a normalised entry."""

    a: object
    b: object
    c: object
    d: object

    def __post_init__(self):
        if self.a * self.d - self.b * self.c == 0:
            raise ValueError("singular Möbius matrix")

    def normalized(self):
        lead = next(v for v in (self.a, self.b, self.c, self.d) if v != 0)
        inv = 1 / lead
        return MoebiusMap(self.a * inv, self.b * inv, self.c * inv, self.d * inv)

    def key(self):
        n = self.normalized()
        return (n.a, n.b, n.c, n.d)

    def __eq__(self, other):
        return isinstance(other, MoebiusMap) and self.key() == other.key()

    def __hash__(self):
        return hash(tuple(repr(v) for v in self.key()))

    def on_point(self, p):
        """Action on a projective point (x : y)."""
        x, y = p
        return _normal_point((self.a * x + self.b * y, self.c * x + self.d * y))

    def on_ratfunc(self, F):
        t = F.gen()
        return (t * self.a + self.b) / (t * self.c + self.d)

    def compose(self, other):
        """self after other."""
        return MoebiusMap(self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
                          self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d)

    def inverse(self):
        return MoebiusMap(self.d, -self.b, -self.c, self.a)


def _normal_point(p):
    x, y = p
    if y == 0:
        return (x / x, y)
    return (x / y, y / y)


def place_to_point(place, base):
    if place.is_infinity:
        return (base.one(), base.zero())
    return (place.root(), base.one())


def _to_standard(p1, p2, p3):
    """Matrix sending p1, p2, p3 to 0, 1, infinity."""
    (x1, y1), (x2, y2), (x3, y3) = p1, p2, p3
    alpha = y3 * x2 - x3 * y2
    beta = y1 * x2 - x1 * y2
    return MoebiusMap(alpha * y1, -alpha * x1, beta * y3, -beta * x3)


def moebius_through(src, dst):
    """The Möbius map with src[i] -> dst[i] for three distinct points."""
    return _to_standard(*dst).inverse().compose(_to_standard(*src))


def base_change(W, mu):
    """Pull-back of W along t -> mu(t), renormalised to polynomial coefficients."""
    F = W.F
    m = mu.on_ratfunc(F)
    lam = F.gen() * mu.c + mu.d
    weights = (2, 4, 6, 8, 12)
    coeffs = [c.compose(m) * lam ** k for c, k in zip(W.coeffs, weights)]
    return WeierstrassModel(W.base, coeffs, F.var)


def critical_values(W, candidates=None):
    cfg = fiber_configuration(W, candidates)
    out = []
    for fd in cfg.fibers:
        if not fd.place.is_infinity and fd.place.degree != 1:
            raise UnsupportedForm("critical values must be rational points of the t-line")
        out.append(place_to_point(fd.place, W.base))
    return out


def admissible_moebius(W1, W2, candidates=None, check_lift=True):
    """Möbius maps sending the critical values of W1 onto those of W2, each
    paired with a flag telling whether it lifts to an isomorphism."""
    S1 = critical_values(W1, candidates)
    S2 = critical_values(W2, candidates)
    if len(S1) < 3 or len(S2) < 3:
        raise TooFewCriticalValues("need at least three critical values")
    if len(S1) != len(S2):
        return []
    target = set(S2)
    src = S1[:3]
    found = {}
    for dst in permutations(S2, 3):
        mu = moebius_through(src, dst)
        if {mu.on_point(p) for p in S1} == target:
            found.setdefault(mu.key(), mu)
    out = []
    for mu in found.values():
        lifts = None
        if check_lift:
            lifts = weierstrass_isomorphism(W1, base_change(W2, mu), candidates) is not None
        out.append((mu, lifts))
    return out


def generic_fiber_automorphisms(W, candidates=None):
    """Scalars u giving (x, y) -> (u^2 x, u^3 y) on a short model."""
    if not W.is_short():
        raise UnsupportedForm("automorphisms listed for short models only")
    base = W.base
    if W.a4 and W.a6:
        n = 2
    elif W.a4:
        n = 4
    else:
        n = 6
    f = UniPoly(base, [-base.one()] + [base.zero()] * (n - 1) + [base.one()], "x")
    roots = roots_in_field(f, candidates)
    return [r for r, _ in roots.roots]


def scaling_substitution_relates(W1, W2, cx, cy, ct):
    """Does (x, y, t) -> (cx x, cy y, ct t) turn the equation of W1 into a
    constant multiple of the equation of W2?  Short models only."""
    if not (W1.is_short() and W2.is_short()):
        raise UnsupportedForm("short models expected")
    F = W1.F
    lam = cy * cy
    if cx ** 3 != lam:
        return False
    tt = F.gen() * ct
    A = W1.a4.compose(tt) * cx
    B = W1.a6.compose(tt) if W1.a6 else W1.a6
    return A == W2.a4 * lam and B == W2.a6 * lam
