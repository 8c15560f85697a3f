"""Weierstrass models over K(t), their invariants and fibre configurations.

Fibre types are read off from the valuations of c4, c6 and the
discriminant after local minimalisation.  This is the outcome of Tate's
algorithm whenever the residue characteristic is not 2 or 3, which is
the only situation supported (characteristic 0 or a prime >= 5).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ..errors import (
    IncompletePlaceList, UnsupportedResidueTest, ZeroDiscriminant,
)
from ..exactcore.factor import factor_mod_p, roots_in_field, squarefree_part
from ..exactcore.poly import UniPoly, poly_powmod
from ..exactcore.ratfunc import RationalFunctionField, RatFunc, valuation
from ..exactcore.scalars import PrimeField, RationalField

# degree bounds for a K3 surface: deg a_i <= 2i
WEIGHTS = {"a1": 2, "a2": 4, "a3": 6, "a4": 8, "a6": 12}
NAMES = ("a1", "a2", "a3", "a4", "a6")


@dataclass(frozen=True)
class Place:
    """A finite place (monic irreducible polynomial) or the place at infinity."""

    poly: Optional[UniPoly] = None

    @property
    def is_infinity(self):
        return self.poly is None

    @property
    def degree(self):
        return 1 if self.poly is None else self.poly.degree()

    def root(self):
        """The t-value of a degree-one finite place."""
        if self.poly is None or self.poly.degree() != 1:
            raise ValueError("place is not a finite degree-one place")
        return -self.poly.coeffs[0]

    @classmethod
    def at(cls, base, r, var="t"):
        return cls(UniPoly(base, [-base(r), base.one()], var))

    def __repr__(self):
        return "Place(oo)" if self.poly is None else f"Place({self.poly!r})"

    def __hash__(self):
        return hash(None if self.poly is None else self.poly.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Place):
            return NotImplemented
        if self.poly is None or other.poly is None:
            return self.poly is None and other.poly is None
        return self.poly == other.poly


INFINITY = Place(None)


class WeierstrassModel:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over K(t)."""

    def __init__(self, base, coeffs, var="t"):
        self.base = base
        self.F = RationalFunctionField(base, var)
        vals = dict(zip(NAMES, (self.F(c) if not isinstance(c, RatFunc) else c for c in coeffs)))
        self.a1, self.a2, self.a3, self.a4, self.a6 = (vals[k] for k in NAMES)
        if not self.discriminant():
            raise ZeroDiscriminant("discriminant vanishes identically")

    @classmethod
    def short(cls, base, A, B=(), var="t"):
        F = RationalFunctionField(base, var)
        return cls(base, [F.zero(), F.zero(), F.zero(), _rf(F, A), _rf(F, B)], var)

    @property
    def coeffs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def is_short(self):
        return not (self.a1 or self.a2 or self.a3)

    @property
    def A(self):
        return self.a4

    @property
    def B(self):
        return self.a6

    def is_polynomial(self):
        return all(c.is_polynomial() for c in self.coeffs)

    def respects_k3_bounds(self):
        return self.is_polynomial() and all(
            c.num.degree() <= WEIGHTS[k] for k, c in zip(NAMES, self.coeffs))

    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.coeffs
        b2 = a1 * a1 + a2 * 4
        b4 = a4 * 2 + a1 * a3
        b6 = a3 * a3 + a6 * 4
        b8 = a1 * a1 * a6 + a2 * a6 * 4 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def c_invariants(self):
        b2, b4, b6, _ = self.b_invariants()
        c4 = b2 * b2 - b4 * 24
        c6 = -(b2 ** 3) + b2 * b4 * 36 - b6 * 216
        return c4, c6

    def discriminant(self):
        b2, b4, b6, b8 = self.b_invariants()
        return -(b2 * b2 * b8) - b4 ** 3 * 8 - b6 * b6 * 27 + b2 * b4 * b6 * 9

    def j_invariant(self):
        c4, _ = self.c_invariants()
        return c4 ** 3 / self.discriminant()

    def rhs(self, x):
        return x ** 3 + self.a2 * x * x + self.a4 * x + self.a6

    def on_curve(self, x, y):
        return y * y + self.a1 * x * y + self.a3 * y == self.rhs(x)

    def map_coeffs(self, fn, base):
        """Apply a coefficient homomorphism (e.g. reduction mod a prime)."""
        F2 = RationalFunctionField(base, self.F.var)
        return WeierstrassModel(base, [c.map_coeffs(fn, F2) for c in self.coeffs], self.F.var)

    def __eq__(self, other):
        return isinstance(other, WeierstrassModel) and self.coeffs == other.coeffs

    def __repr__(self):
        if self.is_short():
            return f"WeierstrassModel(y^2 = x^3 + ({self.a4!r}) x + ({self.a6!r}))"
        return "WeierstrassModel(" + ", ".join(f"{k}={c!r}" for k, c in zip(NAMES, self.coeffs)) + ")"


def _rf(F, c):
    if isinstance(c, RatFunc):
        return c
    if isinstance(c, UniPoly):
        return F(c)
    if isinstance(c, (list, tuple)):
        return F(UniPoly(F.base, c, F.var))
    return F(c)


@dataclass(frozen=True)
class ModelInvariants:
    b2: object
    b4: object
    b6: object
    b8: object
    c4: object
    c6: object
    discriminant: object
    j: object


def model_invariants(W):
    b2, b4, b6, b8 = W.b_invariants()
    c4, c6 = W.c_invariants()
    D = W.discriminant()
    if not D:
        raise ZeroDiscriminant("discriminant vanishes")
    if c4 ** 3 - c6 ** 2 != D * 1728:
        raise ArithmeticError("c4^3 - c6^2 != 1728 Delta")
    return ModelInvariants(b2, b4, b6, b8, c4, c6, D, c4 ** 3 / D)


# fibre types --------------------------------------------------------------------

@dataclass
class LocalFiberData:
    place: Place
    kodaira: str
    root_lattice: Optional[str]
    components: int
    disc_valuation: int
    split: Optional[bool] = None
    certainty: str = "exact"
    minimal_shift: int = 0      # number of times the local model was scaled down


@dataclass
class FiberConfiguration:
    fibers: list
    partial: bool = False
    total_disc_degree: int = 0
    notes: list = field(default_factory=list)

    @property
    def is_k3(self):
        """Euler number 24: the minimal model is a K3 surface."""
        return not self.partial and self.total_disc_degree == 24

    def reducible(self):
        return [f for f in self.fibers if f.components > 1]

    def at(self, place):
        for f in self.fibers:
            if f.place == place:
                return f
        return None


def kodaira_from_valuations(v4, v6, vd):
    """Kodaira symbol, root lattice and component count for a minimal model
    in residue characteristic >= 5.  v4/v6 are None for a zero invariant."""
    inf = 10 ** 9
    v4 = inf if v4 is None else v4
    v6 = inf if v6 is None else v6
    if vd == 0:
        return "I0", None, 1
    if v4 == 0:
        n = vd
        return f"I{n}", (f"A{n - 1}" if n >= 2 else None), n
    table = {2: ("II", None, 1), 3: ("III", "A1", 2), 4: ("IV", "A2", 3),
             8: ("IV*", "E6", 7), 9: ("III*", "E7", 8), 10: ("II*", "E8", 9)}
    if vd == 6 and v4 >= 2 and v6 >= 3:
        return "I0*", "D4", 5
    if vd > 6 and v4 == 2 and v6 == 3:
        n = vd - 6
        return f"I{n}*", f"D{n + 4}", n + 5
    if vd in table:
        return table[vd]
    raise ArithmeticError(f"valuations ({v4}, {v6}, {vd}) match no Kodaira type")


def _poly_val(f, pi):
    """Valuation of a polynomial at a monic place; None for zero."""
    return valuation(f, pi)


def _invariants_at(W, place):
    """(c4, c6, Delta) as polynomials in the local chart of the place."""
    c4, c6 = W.c_invariants()
    D = W.discriminant()
    if not place.is_infinity:
        for x in (c4, c6, D):
            if not x.is_polynomial():
                raise ValueError("model is not integral at finite places")
        return c4.num, c6.num, D.num
    # chart s = 1/t: c4 -> s^16 c4(1/s), c6 -> s^24 c6(1/s), Delta -> s^48 Delta(1/s)
    out = []
    for x, w in ((c4, 16), (c6, 24), (D, 48)):
        n = x.num
        if x.den.degree() > 0:
            raise ValueError("model is not integral at finite places")
        if n.degree() > w:
            raise ValueError("model violates the K3 degree bounds at infinity")
        out.append(n.reverse(w))
    return tuple(out)


def local_fiber(W, place, split_probe=None):
    c4, c6, D = _invariants_at(W, place)
    pi = UniPoly.gen(W.base, W.F.var) if place.is_infinity else place.poly
    v4, v6, vd = _poly_val(c4, pi), _poly_val(c6, pi), _poly_val(D, pi)
    shift = 0
    while (v4 is None or v4 >= 4) and (v6 is None or v6 >= 6) and vd >= 12:
        v4 = None if v4 is None else v4 - 4
        v6 = None if v6 is None else v6 - 6
        vd -= 12
        c6 = c6 // (pi ** 6) if c6 else c6
        shift += 1
    kod, lat, comps = kodaira_from_valuations(v4, v6, vd)
    fd = LocalFiberData(place, kod, lat, comps, vd, minimal_shift=shift)
    if v4 == 0 and vd > 0:
        fd.split, fd.certainty = _split_test(-c6, pi, W.base, split_probe)
    return fd


def _split_test(value, pi, base, probe):
    """Is ``value`` mod pi a square in the residue field?"""
    r = value % pi
    if isinstance(base, PrimeField):
        q = base.p ** pi.degree()
        if not r:
            return None, "exact"
        e = poly_powmod(r, (q - 1) // 2, pi)
        return e.degree() == 0 and e.coeffs[0] == 1, "exact"
    if pi.degree() != 1:
        raise UnsupportedResidueTest("square test in a residue field of degree > 1 over characteristic 0")
    c = r(-pi.coeffs[0]) if r else base.zero()
    if isinstance(base, RationalField):
        c = Fraction(c)
        if c < 0:
            return False, "exact"
        n, d = c.numerator, c.denominator
        from math import isqrt
        return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d, "exact"
    if probe is None:
        raise UnsupportedResidueTest("number field square test needs a probe")
    return probe(c), "probabilistic"


def finite_places(W, candidates=None):
    """Places where the discriminant vanishes, with a completeness flag."""
    D = W.discriminant()
    if not D.is_polynomial():
        raise ValueError("model is not integral")
    f = squarefree_part(D.num)
    base = W.base
    if f.degree() <= 0:
        return [], True
    if isinstance(base, PrimeField):
        return [Place(g) for g, _ in factor_mod_p(f)], True
    roots = roots_in_field(f, candidates)
    places = [Place.at(base, r, W.F.var) for r, _ in roots.roots]
    return places, roots.complete


def fiber_configuration(W, candidates=None, allow_partial=False, split_probe=None):
    """Local fibre data at every place of bad reduction, infinity included."""
    places, complete = finite_places(W, candidates)
    if not complete and not allow_partial:
        raise IncompletePlaceList("discriminant has factors not certified by the candidates")
    fibers = []
    for pl in places:
        fibers.append(local_fiber(W, pl, split_probe))
    inf = local_fiber(W, INFINITY, split_probe)
    if inf.disc_valuation:
        fibers.append(inf)
    total = sum(f.place.degree * f.disc_valuation for f in fibers)
    cfg = FiberConfiguration(fibers, partial=not complete, total_disc_degree=total)
    if complete and total % 12:
        raise ArithmeticError(f"sum of local discriminant degrees is {total}, not a multiple of 12")
    return cfg


def infinity_fiber(W):
    return local_fiber(W, INFINITY)
