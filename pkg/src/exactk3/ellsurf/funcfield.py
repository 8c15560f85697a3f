"""Function field K(x, t)[y] / (y^2 - f(x, t)) of a double cover.

Elements are quotients N / D with N, D of the shape p0 + p1 y and p0, p1
Laurent polynomials in (x, t).  Nothing is ever reduced by a gcd: equality
is decided by cross-multiplication, which keeps every operation a plain
polynomial multiplication.
"""

from ..errors import DivisionByZeroElement
from ..exactcore.multipoly import MultiPolyLite


class CoverFunctionField:
    """The field with generators x, y, t and relation y^2 = rhs(x, t)."""

    def __init__(self, base, rhs_terms, names=("x", "t")):
        self.base = base
        self.names = tuple(names)
        self.rhs = MultiPolyLite(base, 2, rhs_terms, self.names)
        self._zero = MultiPolyLite(base, 2, {}, self.names)
        self._one = self._zero.constant(1)

    @classmethod
    def weierstrass(cls, W):
        """Function field of y^2 = x^3 + A x + B over the base of W."""
        if not W.is_short() or not W.is_polynomial():
            raise ValueError("need a short model with polynomial coefficients")
        terms = {(3, 0): 1}
        for k, c in enumerate(W.a4.num.coeffs):
            if c:
                terms[(1, k)] = c
        for k, c in enumerate(W.a6.num.coeffs):
            if c:
                terms[(0, k)] = terms.get((0, k), 0) + c
        return cls(W.base, terms)

    def poly(self, terms):
        return MultiPolyLite(self.base, 2, terms, self.names)

    def element(self, p0, p1=None, q0=None, q1=None):
        z = self._zero
        return FFElement(self, (p0 if p0 is not None else z, p1 if p1 is not None else z),
                         (q0 if q0 is not None else self._one, q1 if q1 is not None else z))

    def scalar(self, c):
        return self.element(self._zero.constant(c))

    def gens(self):
        x, t = MultiPolyLite.variables(self.base, self.names)
        return self.element(x), self.element(None, self._one), self.element(t)

    def evaluate(self, terms, images):
        """Value of sum c * x^i y^j t^k (terms as {(i, j, k): c}) at images (X, Y, T)."""
        acc = self.scalar(0)
        powers = {}
        for exps, c in terms.items():
            term = self.scalar(c)
            for v, k in enumerate(exps):
                if k:
                    key = (v, k)
                    if key not in powers:
                        powers[key] = images[v] ** k
                    term = term * powers[key]
            acc = acc + term
        return acc


def _mul_pair(F, a, b):
    a0, a1 = a
    b0, b1 = b
    return (a0 * b0 + a1 * b1 * F.rhs, a0 * b1 + a1 * b0)


def _add_pair(a, b):
    return (a[0] + b[0], a[1] + b[1])


class FFElement:
    __slots__ = ("F", "num", "den")

    def __init__(self, F, num, den):
        if not (den[0] or den[1]):
            raise DivisionByZeroElement("zero denominator")
        self.F, self.num, self.den = F, num, den

    def _lift(self, other):
        if isinstance(other, FFElement):
            return other
        return self.F.scalar(other)

    def __add__(self, other):
        o = self._lift(other)
        F = self.F
        if self.den == o.den:
            return FFElement(F, _add_pair(self.num, o.num), self.den)
        num = _add_pair(_mul_pair(F, self.num, o.den), _mul_pair(F, o.num, self.den))
        return FFElement(F, num, _mul_pair(F, self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return FFElement(self.F, (-self.num[0], -self.num[1]), self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        F = self.F
        return FFElement(F, _mul_pair(F, self.num, o.num), _mul_pair(F, self.den, o.den))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise DivisionByZeroElement("zero has no inverse")
        return FFElement(self.F, self.den, self.num)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.F.scalar(1)
        b = self
        while n:
            if n & 1:
                result = result * b
            n >>= 1
            if n:
                b = b * b
        return result

    def __bool__(self):
        return bool(self.num[0] or self.num[1])

    def __eq__(self, other):
        o = self._lift(other)
        lhs = _mul_pair(self.F, self.num, o.den)
        rhs = _mul_pair(self.F, o.num, self.den)
        return lhs[0] == rhs[0] and lhs[1] == rhs[1]

    def canonical(self):
        """(p0 / q, p1 / q) with q free of y, via the conjugate of the denominator."""
        F = self.F
        conj = (self.den[0], -self.den[1])
        num = _mul_pair(F, self.num, conj)
        den = _mul_pair(F, self.den, conj)
        return num[0], num[1], den[0]

    def __repr__(self):
        return f"FFElement(({self.num[0]!r}) + ({self.num[1]!r}) y) / (({self.den[0]!r}) + ({self.den[1]!r}) y)"


def function_field_identity(F, lhs, rhs=0):
    """Exact test lhs == rhs in the function field."""
    return F.scalar(0) + lhs == F.scalar(0) + rhs
