"""Rational function fields k(t) over any field of the tower."""

from .poly import UniPoly, poly_gcd


class RationalFunctionField:
    """The field base(var).  Elements are RatFunc in canonical form."""

    order = None
    degree = None

    def __init__(self, base, var="t"):
        self.base = base
        self.var = var
        self._one_poly = UniPoly._make(base, (base.one(),), var)
        self._zero_poly = UniPoly._make(base, (), var)

    @property
    def characteristic(self):
        return self.base.characteristic

    def __eq__(self, other):
        return (isinstance(other, RationalFunctionField)
                and self.var == other.var and self.base == other.base)

    def __hash__(self):
        return hash(("RationalFunctionField", self.var, id(self.base)))

    def poly(self, coeffs):
        return UniPoly(self.base, coeffs, self.var)

    def gen(self):
        return RatFunc._make(UniPoly.gen(self.base, self.var), self._one_poly, self)

    def __call__(self, x, den=None):
        if den is not None:
            return RatFunc(self._as_poly(x), self._as_poly(den), self)
        if isinstance(x, RatFunc) and x.field == self:
            return x
        return RatFunc._make(self._as_poly(x), self._one_poly, self)

    def _as_poly(self, x):
        if isinstance(x, UniPoly):
            if x.base == self.base and x.var == self.var:
                return x
            if x.base == self.base:
                return UniPoly._make(x.base, x.coeffs, self.var)
            raise TypeError("polynomial over a different base")
        if isinstance(x, (list, tuple)):
            return UniPoly(self.base, x, self.var)
        return UniPoly._make(self.base, (self.base(x),), self.var)

    def zero(self):
        return RatFunc._make(self._zero_poly, self._one_poly, self)

    def one(self):
        return RatFunc._make(self._one_poly, self._one_poly, self)

    def contains(self, x):
        return isinstance(x, RatFunc) and x.field == self

    def random_element(self, rng, degree=3):
        num = UniPoly._make(self.base, [self.base.random_element(rng) for _ in range(degree + 1)], self.var)
        den = UniPoly._make(self.base, [self.base.random_element(rng) for _ in range(degree)]
                            + [self.base.one()], self.var)
        return RatFunc(num, den, self)

    def __repr__(self):
        return f"{self.base!r}({self.var})"


class RatFunc:
    """num/den with gcd 1 and monic denominator."""

    __slots__ = ("num", "den", "field")

    def __init__(self, num, den, field):
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = field._zero_poly, field._one_poly
        else:
            g = poly_gcd(num, den)
            if g.degree() > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            lc = den.lc()
            if lc != 1:
                inv = 1 / lc
                num, den = num.scale(inv), den.scale(inv)
            self.num, self.den = num, den
        self.field = field

    @classmethod
    def _make(cls, num, den, field):
        obj = cls.__new__(cls)
        obj.num, obj.den, obj.field = num, den, field
        return obj

    def _coerce(self, other):
        if isinstance(other, RatFunc) and other.field == self.field:
            return other
        return self.field(other)

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den, self.field)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den, self.field)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._make(-self.num, self.den, self.field)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if o.den.degree() == 0 and self.den.degree() == 0:
            return RatFunc._make(self.num * o.num, self.den, self.field)
        # cross-cancel before multiplying to keep degrees small
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1, d2 = (self.num.exact_div(g1), o.den.exact_div(g1)) if g1.degree() > 0 else (self.num, o.den)
        n2, d1 = (o.num.exact_div(g2), self.den.exact_div(g2)) if g2.degree() > 0 else (o.num, self.den)
        num, den = n1 * n2, d1 * d2
        if not num:
            return self.field.zero()
        lc = den.lc()
        if lc != 1:
            inv = 1 / lc
            num, den = num.scale(inv), den.scale(inv)
        return RatFunc._make(num, den, self.field)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        num, den = self.den, self.num
        inv = 1 / den.lc()
        return RatFunc._make(num.scale(inv), den.scale(inv), self.field)

    def __truediv__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._make(self.num ** n, self.den ** n, self.field)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.den.degree() == 0 and self.num.degree() <= 0:
            return hash(self.num)
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self):
        return self.den.degree() == 0

    def degree(self):
        """deg num - deg den; the negated valuation at infinity."""
        return self.num.degree() - self.den.degree()

    def __call__(self, x):
        d = self.den(x)
        if not d:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num(x) / d

    def compose(self, g):
        """self(g) for g a rational function in the same field."""
        g = self._coerce(g)
        return _horner(self.num, g) / _horner(self.den, g)

    def map_coeffs(self, fn, field):
        return RatFunc(self.num.map_coeffs(fn, field.base, field.var),
                       self.den.map_coeffs(fn, field.base, field.var), field)

    def derivative(self):
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d, self.field)

    def __repr__(self):
        if self.den.degree() == 0:
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


def _horner(poly, g):
    acc = g.field.zero()
    for c in reversed(poly.coeffs):
        acc = acc * g + c
    return acc


def valuation(poly, place):
    """Exponent of the monic polynomial ``place`` in ``poly`` (None for 0)."""
    if not poly:
        return None
    k = 0
    while True:
        q, r = divmod(poly, place)
        if r:
            return k
        poly = q
        k += 1


def ratfunc_valuation(f, place):
    if not f.num:
        return None
    return valuation(f.num, place) - valuation(f.den, place)
