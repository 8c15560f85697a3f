"""Intersection numbers of sections and component identification.

Sections P, Q are horizontal curves on the minimal smooth model.  Their
intersection number equals (P - Q).O, because translation by -Q is an
automorphism of the surface; R.O is read from the poles of x(R), with the
place at infinity handled in the chart s = 1/t, X = s^4 x.
"""

from ..errors import (
    IdenticalSections, PoleAtPlace, UnsupportedFiberType, UnsupportedPlace,
    UnsupportedSectionShape,
)
from ..exactcore.poly import UniPoly, poly_gcd
from .points import check_on_curve, subtract


def section_zero_intersection(W, P):
    """R.O for a section R on a model with polynomial coefficients."""
    if P.is_zero:
        raise IdenticalSections("the zero section meets itself with excess")
    if not W.is_polynomial():
        raise UnsupportedSectionShape("model coefficients must be polynomials")
    x = P.x
    finite = x.den.degree()
    if finite % 2:
        raise ArithmeticError("denominator of x is not a square on an integral model")
    # v_oo(X) with X = s^4 x
    v_inf = 4 + x.den.degree() - x.num.degree() if x else 4
    at_inf = max(0, -v_inf)
    if at_inf % 2:
        raise ArithmeticError("pole order of x at infinity is odd")
    return finite // 2 + at_inf // 2


def section_intersections(W, P, Q):
    """P.Q for distinct sections."""
    check_on_curve(W, P)
    check_on_curve(W, Q)
    if P == Q:
        raise IdenticalSections("self-intersection of a section is not computed here")
    if P.is_zero:
        return section_zero_intersection(W, Q)
    if Q.is_zero:
        return section_zero_intersection(W, P)
    return section_zero_intersection(W, subtract(W, P, Q))


def _require_polynomial_shape(P):
    for c, bound in ((P.x, 4), (P.y, 6)):
        if not c.is_polynomial():
            raise UnsupportedSectionShape("section has a finite pole")
        if c.num.degree() > bound:
            raise UnsupportedSectionShape("section has a pole at infinity")


def coincidence_degree(W, P, Q):
    """deg gcd(x_P - x_Q, y_P - y_Q) plus the same count in the chart at
    infinity.  This counts where the two sections meet on the Weierstrass
    model; it exceeds P.Q at places where both pass through the singular
    point of a reducible fibre."""
    _require_polynomial_shape(P)
    _require_polynomial_shape(Q)
    if P == Q:
        raise IdenticalSections("sections coincide")
    dx = (P.x - Q.x).num
    dy = (P.y - Q.y).num
    if not dx:
        g = dy
    elif not dy:
        g = dx
    else:
        g = poly_gcd(dx, dy)
    finite = g.degree()
    # chart at infinity: X(s) = s^4 x(1/s), Y(s) = s^6 y(1/s)
    vx = _rev_val(dx, 4)
    vy = _rev_val(dy, 6)
    at_inf = min(v for v in (vx, vy) if v is not None)
    return finite + at_inf


def _rev_val(f, w):
    """Valuation at s = 0 of s^w f(1/s), None for f = 0."""
    if not f:
        return None
    return w - f.degree()


# components ------------------------------------------------------------------

def fiber_singular_point(W, place):
    """Singular point (x0, y0) of the reduction of W at a degree-one place."""
    if place.is_infinity or place.degree != 1:
        raise UnsupportedPlace("component test implemented at finite degree-one places")
    r = place.root()
    base = W.base
    vals = []
    for c in W.coeffs:
        if c.den(r) == base.zero():
            raise PoleAtPlace("model coefficient has a pole at the place")
        vals.append(c(r))
    a1, a2, a3, a4, a6 = vals
    b2 = a1 * a1 + a2 * 4
    b4 = a4 * 2 + a1 * a3
    b6 = a3 * a3 + a6 * 4
    g = UniPoly(base, [b6, b4 * 2, b2, base(4)], "x")
    d = poly_gcd(g, g.derivative())
    if d.degree() == 0:
        raise ArithmeticError("fibre is smooth at this place")
    if d.degree() == 2:
        x0 = -b2 / 12
    else:
        x0 = -d.coeffs[0] / d.coeffs[1]
    y0 = -(a1 * x0 + a3) / 2
    return x0, y0


def component_of_section_at(W, P, fd):
    """0 for the identity component, 1 for the non-identity component."""
    if fd.kodaira not in ("I1", "I2", "III"):
        raise UnsupportedFiberType(f"component test not implemented for type {fd.kodaira}")
    if P.is_zero or fd.kodaira == "I1":
        return 0
    place = fd.place
    if place.is_infinity or place.degree != 1:
        raise UnsupportedPlace("component test implemented at finite degree-one places")
    r = place.root()
    zero = W.base.zero()
    if P.x.den(r) == zero:
        # the section meets O in this fibre, hence the identity component
        return 0
    x0, y0 = fiber_singular_point(W, place)
    if P.y.den(r) == zero:
        raise PoleAtPlace("y has a pole where x does not")
    return 1 if (P.x(r) == x0 and P.y(r) == y0) else 0


def corrected_coincidence_intersection(W, P, Q, config):
    """P.Q from the coincidence degree, removing one unit per degree-one
    fibre of type I2 or III in which both sections pass through the
    singular point (there they lie on the same non-identity component of
    the resolution instead of meeting)."""
    total = coincidence_degree(W, P, Q)
    for fd in config.fibers:
        if fd.kodaira not in ("I2", "III") or fd.place.is_infinity:
            continue
        if component_of_section_at(W, P, fd) and component_of_section_at(W, Q, fd):
            total -= fd.place.degree
    return total
