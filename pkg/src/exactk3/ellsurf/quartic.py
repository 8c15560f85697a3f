"""Quartic double covers v^2 = q(u) with a rational point, brought to
Weierstrass form by the classical cubic transformation."""

from dataclasses import dataclass

from ..errors import PointNotOnCurve, SingularQuartic, UnsupportedForm
from ..exactcore.poly import UniPoly, poly_gcd
from ..exactcore.ratfunc import RationalFunctionField
from .funcfield import CoverFunctionField
from .model import WeierstrassModel


@dataclass
class QuarticTransform:
    model: WeierstrassModel
    point_u: object
    e: object          # v-value of the point, the square root of the shifted constant term
    c: object
    d: object

    def forward(self, u, v):
        """(x, y) on the model for a point (u, v) of the quartic."""
        e, c, d = self.e, self.c, self.d
        u = u - self.point_u
        x = (e * 2 * (v + e) + d * u) / (u * u)
        y = (e * e * 4 * (v + e) + e * 2 * (d * u + c * u * u) - d * d * u * u / (e * 2)) / u ** 3
        return x, y

    def backward(self, x, y):
        """(u, v) on the quartic for a point (x, y) of the model."""
        e, c, d = self.e, self.c, self.d
        u = (e * 2 * (x + c) - d * d / (e * 2)) / y
        v = -e + u * (u * x - d) / (e * 2)
        return u + self.point_u, v


def _field_poly(F, coeffs, var="u"):
    return UniPoly(F, [F(c) if not hasattr(c, "field") or c.field != F else c for c in coeffs], var)


def quartic_to_weierstrass(base, coeffs_in_u, point, var="t"):
    """Transform v^2 = sum coeffs_in_u[k] u^k (coefficients in K(t)) at the point
    (u0, v0).  Returns a QuarticTransform."""
    F = RationalFunctionField(base, var)
    q = _field_poly(F, coeffs_in_u)
    if q.degree() not in (3, 4):
        raise SingularQuartic("quartic must have degree 3 or 4 in u")
    if poly_gcd(q, q.derivative()).degree() > 0:
        raise SingularQuartic("quartic has a repeated root")
    u0, v0 = F(point[0]) if not hasattr(point[0], "field") else point[0], \
        F(point[1]) if not hasattr(point[1], "field") else point[1]
    if v0 * v0 != q(u0):
        raise PointNotOnCurve("v0^2 != q(u0)")
    if not v0:
        raise UnsupportedForm("the point must not be a branch point (v0 = 0)")
    shift = UniPoly(F, [u0, F.one()], "u")
    qs = q.compose(shift)
    a, b, c, d = qs.coeff(4), qs.coeff(3), qs.coeff(2), qs.coeff(1)
    e = v0
    a1 = d / e
    a2 = c - d * d / (e * e * 4)
    a3 = e * b * 2
    a4 = -(e * e * a * 4)
    a6 = a2 * a4
    W = WeierstrassModel(base, [a1, a2, a3, a4, a6], var)
    return QuarticTransform(W, u0, e, c, d)


def verify_round_trip(T, coeffs_in_u):
    """Symbolic checks in the function field of v^2 = q(u): the forward map
    lands on the model and the backward map undoes it."""
    base = T.model.base
    terms = {}
    for k, c in enumerate(coeffs_in_u):
        c = T.model.F(c) if not hasattr(c, "field") else c
        if not c.is_polynomial():
            raise UnsupportedForm("quartic coefficients must be polynomial in t")
        for j, a in enumerate(c.num.coeffs):
            if a:
                terms[(k, j)] = a
    FF = CoverFunctionField(base, terms, names=("u", "t"))
    u, v, t = FF.gens()

    def lift(r):
        from ..exactcore.multipoly import MultiPolyLite
        num = MultiPolyLite(base, 2, {(0, j): a for j, a in enumerate(r.num.coeffs) if a}, FF.names)
        den = MultiPolyLite(base, 2, {(0, j): a for j, a in enumerate(r.den.coeffs) if a}, FF.names)
        return FF.element(num, None, den)

    e, c, d, u0 = (lift(z) for z in (T.e, T.c, T.d, T.point_u))
    shifted = QuarticTransform(T.model, u0, e, c, d)
    x, y = shifted.forward(u, v)
    a1, a2, a3, a4, a6 = (lift(z) for z in T.model.coeffs)
    on_model = y * y + a1 * x * y + a3 * y == x ** 3 + a2 * x * x + a4 * x + a6
    ub, vb = shifted.backward(x, y)
    return on_model and ub == u and vb == v
