"""Dense univariate polynomials over any exact field in the tower."""


class UniPoly:
    """Polynomial with ascending coefficients over the field ``base``.

    ``base`` is a field descriptor (QQ, GF(p), a NumberField or a
    RationalFunctionField).  The coefficient tuple never ends in a zero.
    """

    __slots__ = ("base", "coeffs", "var")

    def __init__(self, base, coeffs=(), var="t"):
        cs = [base(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.base = base
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def _make(cls, base, coeffs, var):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        obj = cls.__new__(cls)
        obj.base = base
        obj.coeffs = tuple(cs)
        obj.var = var
        return obj

    @classmethod
    def constant(cls, base, c, var="t"):
        return cls._make(base, (base(c),), var)

    @classmethod
    def gen(cls, base, var="t"):
        return cls._make(base, (base.zero(), base.one()), var)

    @classmethod
    def monomial(cls, base, k, c=1, var="t"):
        return cls._make(base, (base.zero(),) * k + (base(c),), var)

    def degree(self):
        return len(self.coeffs) - 1

    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.base.zero()

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.base.zero()

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self):
        return len(self.coeffs) <= 1

    def _lift(self, other):
        if isinstance(other, UniPoly) and other.base == self.base:
            return other
        return UniPoly._make(self.base, (self.base(other),), self.var)

    def __add__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly._make(self.base, out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._make(self.base, [-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def scale(self, c):
        c = self.base(c)
        if not c:
            return UniPoly._make(self.base, (), self.var)
        return UniPoly._make(self.base, [a * c for a in self.coeffs], self.var)

    def __mul__(self, other):
        if not (isinstance(other, UniPoly) and other.base == self.base):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly._make(self.base, (), self.var)
        out = [self.base.zero()] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return UniPoly._make(self.base, out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly._make(self.base, (self.base.one(),), self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        o = self._lift(other)
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = o.degree()
        if len(rem) - 1 < db:
            return UniPoly._make(self.base, (), self.var), self
        inv = 1 / o.lc()
        quo = [self.base.zero()] * (len(rem) - db)
        bc = o.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c * inv
            quo[k - db] = q
            for i in range(db + 1):
                if bc[i]:
                    rem[k - db + i] = rem[k - db + i] - q * bc[i]
        return UniPoly._make(self.base, quo, self.var), UniPoly._make(self.base, rem[:db], self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def divides(self, other):
        return not (other % self)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.base == other.base and self.coeffs == other.coeffs
        try:
            return self == self._lift(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0]) if self.coeffs else hash(0)
        return hash(self.coeffs)

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return self.base.zero()
        return acc

    def compose(self, g):
        """self(g) as a polynomial."""
        acc = UniPoly._make(self.base, (), self.var)
        for c in reversed(self.coeffs):
            acc = acc * g + c
        return acc

    def derivative(self):
        return UniPoly._make(self.base, [c * k for k, c in enumerate(self.coeffs)][1:], self.var)

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        inv = 1 / lc
        return UniPoly._make(self.base, [c * inv for c in self.coeffs], self.var)

    def shift(self, k):
        """Multiply by var**k."""
        if not self.coeffs:
            return self
        return UniPoly._make(self.base, (self.base.zero(),) * k + self.coeffs, self.var)

    def reverse(self, n=None):
        """var**n * self(1/var); n defaults to the degree."""
        n = self.degree() if n is None else n
        cs = list(self.coeffs) + [self.base.zero()] * (n + 1 - len(self.coeffs))
        return UniPoly._make(self.base, cs[::-1], self.var)

    def map_coeffs(self, fn, base, var=None):
        return UniPoly(base, [fn(c) for c in self.coeffs], var or self.var)

    def valuation_at_zero(self):
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            cs = str(c)
            if mono:
                if cs == "1":
                    terms.append(mono)
                elif cs == "-1":
                    terms.append("-" + mono)
                else:
                    if " " in cs:
                        cs = f"({cs})"
                    terms.append(f"{cs}*{mono}")
            else:
                terms.append(cs if " " not in cs else f"({cs})")
        return " + ".join(terms).replace("+ -", "- ")


def poly_gcd(f, g):
    """Monic gcd; gcd(0, 0) = 0."""
    a, b = f, g
    while b:
        a, b = b, a % b
        if b:
            b = b.monic()
    return a.monic()


def poly_xgcd(f, g):
    """(d, s, t) with s*f + t*g = d and d monic (or zero)."""
    base, var = f.base, f.var
    zero = UniPoly._make(base, (), var)
    one = UniPoly._make(base, (base.one(),), var)
    r0, r1 = f, g
    s0, s1 = one, zero
    t0, t1 = zero, one
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = 1 / r0.lc()
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def poly_powmod(f, n, m):
    result = UniPoly._make(f.base, (f.base.one(),), f.var) % m
    base = f % m
    while n:
        if n & 1:
            result = (result * base) % m
        n >>= 1
        if n:
            base = (base * base) % m
    return result


def resultant(f, g):
    """Resultant via the Euclidean remainder sequence over a field."""
    if not f or not g:
        return f.base.zero()
    res = f.base.one()
    a, b = f, g
    while b.degree() > 0:
        da, db = a.degree(), b.degree()
        r = a % b
        if not r:
            return f.base.zero()
        if da % 2 == 1 and db % 2 == 1:
            res = -res
        res = res * b.lc() ** (da - r.degree())
        a, b = b, r
    if not b:
        return f.base.zero()
    return res * b.lc() ** a.degree()


def discriminant(f):
    n = f.degree()
    r = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return r * sign / f.lc()
