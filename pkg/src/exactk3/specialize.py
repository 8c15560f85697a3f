"""Reduction of number-field data modulo a degree-one prime."""

from dataclasses import dataclass
from fractions import Fraction

from .errors import NoDegreeOnePlace, NotAdmissible
from .exactcore.factor import factor_mod_p
from .exactcore.poly import UniPoly
from .exactcore.ratfunc import RationalFunctionField, RatFunc
from .exactcore.scalars import GF, NFElem, NumberField


@dataclass(frozen=True)
class ReductionMap:
    """O_K -> F_p sending the generator of K to the root r of its minimal polynomial."""

    field: NumberField
    p: int
    root: int

    def __post_init__(self):
        if self.p == 2:
            raise ValueError("p must be odd")
        if _minpoly_value(self.field, self.root, self.p) != 0:
            raise ValueError(f"{self.root} is not a root of the minimal polynomial mod {self.p}")

    @property
    def residue_field(self):
        return GF(self.p)

    def scalar(self, c):
        F = self.residue_field
        if isinstance(c, NFElem):
            acc = 0
            power = 1
            for a in c.c:
                acc += _reduce_fraction(a, self.p) * power
                power = power * self.root % self.p
            return F(acc)
        return F(_reduce_fraction(Fraction(c), self.p))

    def poly(self, f):
        return UniPoly(self.residue_field, [self.scalar(c) for c in f.coeffs], f.var)

    def ratfunc(self, f, field=None):
        field = field or RationalFunctionField(self.residue_field, f.field.var)
        den = self.poly(f.den)
        if not den:
            raise NotAdmissible("denominator reduces to zero")
        return RatFunc(self.poly(f.num), den, field)

    def model(self, W):
        from .ellsurf.model import WeierstrassModel
        F = RationalFunctionField(self.residue_field, W.F.var)
        return WeierstrassModel(self.residue_field, [self.ratfunc(c, F) for c in W.coeffs], W.F.var)

    def section(self, W_reduced, P):
        from .ellsurf.points import SurfaceSection, check_on_curve
        if P.is_zero:
            return P
        F = W_reduced.F
        Q = SurfaceSection(self.ratfunc(P.x, F), self.ratfunc(P.y, F))
        return check_on_curve(W_reduced, Q)

    def reduce(self, obj, W_reduced=None):
        """Dispatch on the type of ``obj``."""
        from .ellsurf.model import WeierstrassModel
        from .ellsurf.points import SurfaceSection
        if isinstance(obj, WeierstrassModel):
            return self.model(obj)
        if isinstance(obj, SurfaceSection):
            if W_reduced is None:
                raise ValueError("reducing a section needs the reduced model")
            return self.section(W_reduced, obj)
        if isinstance(obj, RatFunc):
            return self.ratfunc(obj)
        if isinstance(obj, UniPoly):
            return self.poly(obj)
        return self.scalar(obj)

    def to_json(self):
        return {"p": self.p, "root": self.root}


def _reduce_fraction(a, p):
    if a.denominator % p == 0:
        raise NotAdmissible(f"denominator {a.denominator} is divisible by {p}")
    return a.numerator * pow(a.denominator, -1, p) % p


def _minpoly_value(K, r, p):
    acc = 0
    for c in reversed(K.minpoly):
        acc = (acc * r + _reduce_fraction(Fraction(c), p)) % p
    return acc


def degree_one_roots(K, p):
    """Simple roots of the minimal polynomial mod p, ascending."""
    F = GF(p)
    f = UniPoly(F, [_reduce_fraction(Fraction(c), p) for c in K.minpoly], "x")
    return sorted(int(-g.coeffs[0].v) % p for g, k in factor_mod_p(f) if g.degree() == 1 and k == 1)


def find_degree_one_place(K, p, root=None):
    """Reduction map at p with the smallest simple root, or the given root."""
    roots = degree_one_roots(K, p)
    if not roots:
        raise NoDegreeOnePlace(f"minimal polynomial has no simple root mod {p}")
    if root is None:
        return ReductionMap(K, p, roots[0])
    if root % p not in roots:
        raise NoDegreeOnePlace(f"{root} is not a simple root mod {p}")
    return ReductionMap(K, p, root % p)


@dataclass
class EquivarianceReport:
    entries: list       # (name, equal?, detail)

    @property
    def ok(self):
        return all(eq for _, eq, _ in self.entries)


def equivariance_check(quantities):
    """Compare (name, value over K, value over F_p) triples entrywise."""
    out = []
    for name, a, b in quantities:
        eq = a == b
        out.append((name, eq, "equal" if eq else f"{a!r} != {b!r}"))
    return EquivarianceReport(out)
