"""Scalar fields: rationals, prime fields and number fields.

Rationals are plain ``fractions.Fraction``.  Prime field and number field
elements are small immutable classes that interoperate with ``int`` and
(for number fields) ``Fraction`` operands.
"""

from fractions import Fraction

from ..errors import NotPrime


_MR_BASES = (2, 3, 5, 7, 11, 13, 17)


def is_probable_prime(n):
    """Miller-Rabin with a fixed base set; deterministic for n < 3.4e14."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    characteristic = 0
    degree = 1
    order = None

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} to a rational")

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def contains(self, x):
        return isinstance(x, (int, Fraction))

    def random_element(self, rng, bound=20):
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


class Fp:
    """Residue class modulo a prime; carries its field."""

    __slots__ = ("v", "field")

    def __init__(self, v, field):
        self.v = v % field.p
        self.field = field

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.field.p != self.field.p:
                raise TypeError("mixing different prime fields")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            p = self.field.p
            if other.denominator % p == 0:
                raise ZeroDivisionError("denominator vanishes mod p")
            return other.numerator * pow(other.denominator, -1, p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v + o, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v - o, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o - self.v, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v * o, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.field)

    def __pos__(self):
        return self

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("inverse of zero in GF(p)")
        return Fp(pow(self.v, -1, self.field.p), self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.field.p == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return Fp(self.v * pow(o, -1, self.field.p), self.field)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o, self.field) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return Fp(pow(self.v, n, self.field.p), self.field)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.v == other.v and self.field.p == other.field.p
        if isinstance(other, (int, Fraction)):
            try:
                return self.v == self._coerce(other) % self.field.p
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.field.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return str(self.v)

    def is_square(self):
        if self.v == 0:
            return True
        return pow(self.v, (self.field.p - 1) // 2, self.field.p) == 1

    def sqrt(self):
        """A square root, or None.  Tonelli-Shanks."""
        p = self.field.p
        a = self.v
        if a == 0:
            return Fp(0, self.field)
        if not self.is_square():
            return None
        if p % 4 == 3:
            return Fp(pow(a, (p + 1) // 4, p), self.field)
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
        return Fp(r, self.field)


class PrimeField:
    """GF(p).  Instances are cached so equal moduli share one object."""

    _cache = {}
    degree = 1

    def __new__(cls, p):
        if p in cls._cache:
            return cls._cache[p]
        if not is_probable_prime(p):
            raise NotPrime(p)
        obj = super().__new__(cls)
        obj.p = p
        cls._cache[p] = obj
        return obj

    @property
    def characteristic(self):
        return self.p

    @property
    def order(self):
        return self.p

    def __call__(self, x):
        if isinstance(x, Fp):
            if x.field.p != self.p:
                raise TypeError("mixing different prime fields")
            return x
        if isinstance(x, int):
            return Fp(x, self)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError("denominator vanishes mod p")
            return Fp(x.numerator * pow(x.denominator, -1, self.p), self)
        if isinstance(x, str):
            return self(Fraction(x))
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    def zero(self):
        return Fp(0, self)

    def one(self):
        return Fp(1, self)

    def contains(self, x):
        return isinstance(x, int) or (isinstance(x, Fp) and x.field is self)

    def elements(self):
        return [Fp(i, self) for i in range(self.p)]

    def random_element(self, rng):
        return Fp(rng.randrange(self.p), self)

    def __repr__(self):
        return f"GF({self.p})"

    def __reduce__(self):
        return (PrimeField, (self.p,))


def GF(p):
    return PrimeField(p)


class NFElem:
    """Element of Q[a]/(minpoly), stored as a tuple of d Fractions."""

    __slots__ = ("c", "field")

    def __init__(self, coeffs, field):
        self.c = coeffs
        self.field = field

    def _coerce(self, other):
        if isinstance(other, NFElem):
            if other.field is not self.field:
                raise TypeError("mixing different number fields")
            return other.c
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),) + self.field._zeros[1:]
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return NFElem(tuple(a + b for a, b in zip(self.c, o)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return NFElem(tuple(a - b for a, b in zip(self.c, o)), self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return NFElem(tuple(b - a for a, b in zip(self.c, o)), self.field)

    def __neg__(self):
        return NFElem(tuple(-a for a in self.c), self.field)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElem(tuple(a * other for a in self.c), self.field)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return NFElem(self.field._mulvec(self.c, o), self.field)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in a number field")
        return NFElem(self.field._invvec(self.c), self.field)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return NFElem(tuple(a / other for a in self.c), self.field)
        if isinstance(other, NFElem):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return NFElem(o, self.field) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, NFElem):
            return self.field is other.field and self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.c[0] == other and not any(self.c[1:])
        return NotImplemented

    def __hash__(self):
        if not any(self.c[1:]):
            return hash(self.c[0])
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def is_rational(self):
        return not any(self.c[1:])

    def __repr__(self):
        terms = []
        for k, a in enumerate(self.c):
            if a == 0:
                continue
            mono = "" if k == 0 else (self.field.name if k == 1 else f"{self.field.name}^{k}")
            if mono and a == 1:
                terms.append(mono)
            elif mono and a == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{a}" + (f"*{mono}" if mono else ""))
        return " + ".join(terms) if terms else "0"


class NumberField:
    """Q(a) with a a root of a monic irreducible rational polynomial.

    ``minpoly`` is the ascending coefficient list including the leading 1.
    Irreducibility is the caller's responsibility.
    """

    characteristic = 0
    order = None

    def __init__(self, minpoly, name="a"):
        coeffs = tuple(Fraction(c) for c in minpoly)
        if len(coeffs) < 2 or coeffs[-1] != 1:
            raise ValueError("minimal polynomial must be monic of degree >= 1")
        self.minpoly = coeffs
        self.degree = len(coeffs) - 1
        self.name = name
        d = self.degree
        self._zeros = (Fraction(0),) * d
        # a^(d+k) for k = 0..d-2 expressed in the power basis
        self._high = []
        cur = tuple(-c for c in coeffs[:-1])
        for _ in range(max(d - 1, 0)):
            self._high.append(cur)
            top = cur[-1]
            nxt = (Fraction(0),) + cur[:-1]
            cur = tuple(nxt[i] - top * coeffs[i] for i in range(d))
        if d >= 1:
            self._high.append(cur)

    def _mulvec(self, u, v):
        d = self.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b:
                        prod[i + j] += a * b
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                row = self._high[k - d]
                for i in range(d):
                    out[i] += c * row[i]
        return tuple(out)

    def _invvec(self, u):
        from .poly import UniPoly, poly_xgcd
        f = UniPoly(QQ, u)
        m = UniPoly(QQ, self.minpoly)
        g, s, _ = poly_xgcd(f, m)
        if g.degree() != 0:
            raise ZeroDivisionError("element is not invertible; minpoly reducible?")
        s = s * (1 / g.coeffs[0])
        out = list(s.coeffs) + [Fraction(0)] * (self.degree - len(s.coeffs))
        return tuple(out)

    def __call__(self, x):
        if isinstance(x, NFElem):
            if x.field is not self:
                raise TypeError("element of a different number field")
            return x
        if isinstance(x, (int, Fraction, str)):
            return NFElem((Fraction(x),) + self._zeros[1:], self)
        if isinstance(x, (list, tuple)):
            return self.from_coeffs(x)
        raise TypeError(f"cannot coerce {x!r} into {self!r}")

    def from_coeffs(self, coeffs):
        """Reduce an arbitrary-length coefficient list modulo the minpoly."""
        coeffs = [Fraction(c) for c in coeffs]
        d = self.degree
        if len(coeffs) <= d:
            return NFElem(tuple(coeffs) + self._zeros[len(coeffs):], self)
        x = self.zero()
        power = self.one()
        gen = self.gen()
        for c in coeffs:
            if c:
                x = x + power * c
            power = power * gen
        return x

    def zero(self):
        return NFElem(self._zeros, self)

    def one(self):
        return NFElem((Fraction(1),) + self._zeros[1:], self)

    def gen(self):
        if self.degree == 1:
            return NFElem((-self.minpoly[0],), self)
        return NFElem((Fraction(0), Fraction(1)) + self._zeros[2:], self)

    def contains(self, x):
        return isinstance(x, (int, Fraction)) or (isinstance(x, NFElem) and x.field is self)

    def random_element(self, rng, bound=5):
        return NFElem(tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
                            for _ in range(self.degree)), self)

    def __repr__(self):
        return f"NumberField({[str(c) for c in self.minpoly]}, {self.name!r})"
