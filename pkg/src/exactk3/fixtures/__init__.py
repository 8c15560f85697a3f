"""Loader for the bundled JSON data: number field, models, sections,
lattice matrices and vectors, polynomials and group generators."""

import json
from fractions import Fraction
from functools import cached_property
from pathlib import Path

from ..exactcore.multipoly import MultiPolyLite
from ..exactcore.poly import UniPoly
from ..exactcore.ratfunc import RationalFunctionField
from ..exactcore.scalars import GF, NumberField

DEFAULT_DIR = Path(__file__).resolve().parent

FILES = ("field", "matrices", "vectors", "sections", "section_p", "models", "kappa",
         "salem", "projrep")


def _fractions(rows):
    return [[Fraction(a) for a in row] for row in rows]


class FixtureSet:
    """Parsed view of a fixture directory; raw JSON stays available in ``raw``."""

    def __init__(self, directory=None):
        self.directory = Path(directory) if directory else DEFAULT_DIR
        self.raw = {}
        for name in FILES:
            path = self.directory / f"{name}.json"
            with open(path, encoding="utf-8") as fh:
                self.raw[name] = json.load(fh)

    # number field --------------------------------------------------------------

    @cached_property
    def field(self):
        f = self.raw["field"]
        return NumberField(f["minpoly"], f["name"])

    @cached_property
    def sqrt2(self):
        return self.field(self.raw["field"]["sqrt2"])

    @cached_property
    def fiber_roots(self):
        """t_1..t_8 in K, in the order labelling the fibre components."""
        return [self.field(v) for v in self.raw["field"]["places"]["values"]]

    @property
    def reduction_prime(self):
        return self.raw["field"]["reduction"]["p"]

    @property
    def reduction_root(self):
        return self.raw["field"]["reduction"]["root"]

    @property
    def alternate_prime(self):
        return self.raw["field"]["alternate_prime"]["p"]

    # lattice data --------------------------------------------------------------

    def matrix(self, name):
        return _fractions(self.raw["matrices"][name]["matrix"])

    @cached_property
    def gram(self):
        return self.matrix("gram_B")

    @cached_property
    def pushforward_f(self):
        return self.matrix("pushforward_f")

    @cached_property
    def pushforward_iota(self):
        return self.matrix("pushforward_iota")

    @cached_property
    def pushforward_composite(self):
        return self.matrix("pushforward_composite")

    def vector(self, name):
        return [Fraction(a) for a in self.raw["vectors"][name]["vector"]]

    @cached_property
    def p2(self):
        return self.vector("p2")

    @cached_property
    def h(self):
        return self.vector("h")

    # models and sections -------------------------------------------------------

    def short_model(self, name, base):
        """Short model ``name`` over ``base`` (QQ, GF(p) or the number field)."""
        from ..ellsurf.model import WeierstrassModel
        m = self.raw["models"][name]
        conv = self._converter(base)
        return WeierstrassModel.short(base, [conv(c) for c in m["A"]], [conv(c) for c in m["B"]])

    def _converter(self, base):
        if base is self.field:
            return lambda c: base(c) if not isinstance(c, list) else base(c)
        return lambda c: base(Fraction(c)) if not isinstance(c, list) else base(c)

    def e1(self, base):
        return self.short_model("e1", base)

    def reduced_sections(self, W):
        """S_1..S_8 as printed over F_p, on the model W over GF(p)."""
        from ..ellsurf.points import section
        return [section(W, s["x"], s["y"]) for s in self.raw["sections"]["reduced"]["sections"]]

    def lifted_sections(self, W):
        """Lifts of S_1..S_8 to K(t), on the model W over K."""
        from ..ellsurf.points import section
        K = self.field
        return [section(W, [K(c) for c in s["x"]], [K(c) for c in s["y"]])
                for s in self.raw["sections"]["lifted"]["sections"]]

    def section_p(self, W, check=False):
        from ..ellsurf.points import section
        K = self.field
        F = RationalFunctionField(K, "t")
        d = self.raw["section_p"]

        def rf(part):
            return F(UniPoly(K, [K(c) for c in part["num"]]), UniPoly(K, [K(c) for c in part["den"]]))
        return section(W, rf(d["x"]), rf(d["y"]), check=check)

    def quartic(self):
        """(coefficients in u over K[t], point (u0, v0)) of the quartic model."""
        K = self.field
        q = self.raw["models"]["quartic"]
        coeffs = [UniPoly(K, [K(c) for c in cs]) for cs in q["coeffs_in_u"]]
        point = (UniPoly(K, [K(c) for c in q["point"]["u"]]), UniPoly(K, [K(c) for c in q["point"]["v"]]))
        return coeffs, point

    def enriques_equation(self):
        K = self.field
        e = self.raw["models"]["enriques"]
        return MultiPolyLite(K, 3, {tuple(x): K(c) for x, c in e["terms"]}, tuple(e["variables"]))

    def kappa_terms(self):
        """{component: (num terms, den terms)} with terms {(i, j, k): c} in (x, y, t)."""
        K = self.field
        d = self.raw["kappa"]
        out = {}
        for name in ("xtilde", "ytilde", "s"):
            out[name] = tuple({tuple(e): K(c) for e, c in d[name][part]} for part in ("num", "den"))
        return out

    # polynomials and groups ------------------------------------------------------

    def salem_polynomial(self, name):
        return list(self.raw["salem"][name]["coeffs"])

    @cached_property
    def cyclotomic_field(self):
        d = self.raw["projrep"]
        return NumberField(d["minpoly"], d["name"])

    def projrep_generators(self):
        K = self.cyclotomic_field
        return [[[K(c) for c in row] for row in g] for g in self.raw["projrep"]["generators"]]

    def projrep_form(self, name):
        K = self.cyclotomic_field
        d = self.raw["projrep"]
        return MultiPolyLite(K, len(d["variables"]), {tuple(e): K(c) for e, c in d[name]},
                             tuple(d["variables"]))

    def projrep_terms(self, name):
        K = self.cyclotomic_field
        return {tuple(e): K(c) for e, c in self.raw["projrep"][name]}


def load_fixtures(directory=None):
    return FixtureSet(directory)


def prime_field(p):
    return GF(p)
