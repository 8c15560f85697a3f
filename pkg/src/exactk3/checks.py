"""Check suites that recompute the published data from the bundled fixtures.

Every check returns ``(passed, details)``; ``passed`` is None for a skip.
A check that raises is reported as a failure carrying the exception text.
"""

import json
import time
from dataclasses import dataclass, field
from functools import cached_property

from .errors import NoDegreeOnePlace, NotAdmissible, NotPrime, UnknownSuite
from .exactcore import GF, NumberField, is_probable_prime
from .exactcore.linalg import mat_mul, solve_left, vec_mat
from .fixtures import FixtureSet

SUITES = ("sanity", "fibers", "gram", "vinberg", "enriques", "genus", "salem", "projrep",
          "kappa", "specialize")


@dataclass
class CheckResult:
    id: str
    status: str          # "pass", "fail" or "skip"
    details: str
    seconds: float = 0.0

    def to_json(self):
        return {"id": self.id, "status": self.status, "details": self.details}


@dataclass
class CheckReport:
    suite: str
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.status != "fail" for c in self.checks)

    def to_json(self):
        # wall time is left out so that repeated runs serialise identically
        return {"suite": self.suite, "checks": [c.to_json() for c in self.checks]}

    def to_text(self):
        marks = {"pass": "✓", "fail": "✗", "skip": "-"}
        lines = [f"{marks[c.status]} {c.id:<40} {c.seconds:7.2f}s  {c.details}" for c in self.checks]
        passed = sum(c.status == "pass" for c in self.checks)
        lines.append(f"{self.suite}: {passed}/{len(self.checks)} passed")
        return "\n".join(lines)


def emit_report(report, fmt="text", path=None):
    """Serialise a report as text or JSON; write to ``path`` when given."""
    if fmt == "json":
        out = json.dumps(report.to_json(), indent=2, ensure_ascii=False) + "\n"
    elif fmt == "text":
        out = report.to_text() + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(out)
    return out


def _same(a, b):
    return "equal" if a == b else f"got {a}, expected {b}"


class Context:
    """Shared, lazily built objects for all suites."""

    def __init__(self, fixtures=None, prime=113, char0=False):
        if prime <= 3 or not is_probable_prime(prime):
            raise NotPrime(f"reduction prime must be a prime >= 5, got {prime}")
        self.fx = fixtures if isinstance(fixtures, FixtureSet) else FixtureSet(fixtures)
        self.p = prime
        self.char0 = char0

    # number field side ----------------------------------------------------------

    @property
    def K(self):
        return self.fx.field

    @cached_property
    def roots_K(self):
        return self.fx.fiber_roots

    @cached_property
    def model_K(self):
        return self.fx.e1(self.K)

    @cached_property
    def config_K(self):
        from .ellsurf import fiber_configuration
        return fiber_configuration(self.model_K, candidates=self.roots_K)

    @cached_property
    def sections_K(self):
        return self.fx.lifted_sections(self.model_K)

    # reduction ------------------------------------------------------------------

    @cached_property
    def reduction(self):
        from .specialize import find_degree_one_place
        root = self.fx.reduction_root if self.p == self.fx.reduction_prime else None
        return find_degree_one_place(self.K, self.p, root)

    @cached_property
    def Fp(self):
        return GF(self.p)

    @cached_property
    def model_p(self):
        return self.reduction.model(self.model_K)

    @cached_property
    def roots_p(self):
        return [self.reduction.scalar(t) for t in self.roots_K]

    @cached_property
    def places_p(self):
        from .ellsurf import Place
        return [Place.at(self.Fp, t) for t in self.roots_p]

    @cached_property
    def config_p(self):
        from .ellsurf import fiber_configuration
        return fiber_configuration(self.model_p)

    @cached_property
    def sections_p(self):
        """The printed sections when p is the published prime, else the reduced lifts."""
        if self.p == self.fx.reduction_prime:
            return self.fx.reduced_sections(self.model_p)
        return [self.reduction.section(self.model_p, P) for P in self.sections_K]

    @cached_property
    def basis_p(self):
        from .ellsurf import NSBasisSpec
        return NSBasisSpec(self.places_p, self.sections_p)

    @cached_property
    def torsion_p(self):
        from .ellsurf import section
        return section(self.model_p, [0], [0])

    @cached_property
    def gram_p(self):
        from .ellsurf import ns_gram_assemble
        return ns_gram_assemble(self.model_p, self.basis_p, self.config_p)

    def pushforward_p(self, point_map, place_map):
        from .ellsurf import build_pushforward_matrix
        return build_pushforward_matrix(self.model_p, self.basis_p, self.gram_p, point_map,
                                        place_map, self.torsion_p, config=self.config_p)

    @cached_property
    def iota_p(self):
        from .ellsurf import Place, base_involution, translate_by_origin_torsion
        W = self.model_p
        return self.pushforward_p(lambda Q: translate_by_origin_torsion(W, base_involution(W, Q)),
                                  lambda pl: Place.at(self.Fp, -pl.root()))

    @cached_property
    def order8_p(self):
        """Pushforward of t -> zeta t with zeta the reduction of t_2 (a primitive 8th root)."""
        from .ellsurf import Place, pushforward_under_scaling
        W = self.model_p
        zeta = self.roots_p[1]
        return self.pushforward_p(lambda Q: pushforward_under_scaling(W, Q, zeta),
                                  lambda pl: Place.at(self.Fp, zeta * pl.root()))

    # lattice side ---------------------------------------------------------------

    @property
    def G(self):
        return self.fx.gram

    @property
    def F(self):
        return self.fx.pushforward_f

    @property
    def I(self):
        return self.fx.pushforward_iota

    @cached_property
    def LB(self):
        from .qlattice import QuadLattice
        return QuadLattice(self.G)

    @cached_property
    def NS(self):
        from .qlattice import overlattice
        return overlattice(self.LB, [self.fx.p2])

    def to_ns(self, M):
        from .qlattice import change_basis
        return change_basis(M, self.NS.basis)

    @cached_property
    def h_ns(self):
        return solve_left(self.fx.h, self.NS.basis)

    @cached_property
    def polarized(self):
        from .hypgeo import PolarizedLattice
        return PolarizedLattice(self.NS, self.h_ns)

    @cached_property
    def iota_split(self):
        from .qlattice import invariant_coinvariant
        return invariant_coinvariant(self.NS, self.to_ns(self.I))


# sanity -------------------------------------------------------------------------

def check_isometry(ctx):
    F, G = ctx.F, ctx.G
    ok = mat_mul(mat_mul(F, G), [list(r) for r in zip(*F)]) == G
    return ok, "F G F^T = G" if ok else "F G F^T differs from G"


def check_spectral_radius(ctx):
    from fractions import Fraction
    from .salem import matrix_entropy_check
    r = matrix_entropy_check(ctx.F, ctx.fx.salem_polynomial("tau8"))
    if not (r.divides and r.cofactor_on_circle):
        return False, f"divides={r.divides} cofactor on circle={r.cofactor_on_circle}"
    inside = Fraction(158233, 100000) < r.radius.lo and r.radius.hi < Fraction(158235, 100000)
    return inside, f"Salem factor divides charpoly, radius in {r.radius}"


def check_nef_cone(ctx):
    from .hypgeo import separating_roots
    image = vec_mat(ctx.h_ns, ctx.to_ns(ctx.F))
    roots = separating_roots(ctx.polarized, image)
    return not roots, f"{len(roots)} separating roots between h and its image"


def check_discriminant_action(ctx):
    from .qlattice import disc_action_subgroup, discriminant_group
    disc = discriminant_group(ctx.NS)
    from_matrix = disc_action_subgroup(ctx.NS, [ctx.to_ns(ctx.F)], disc)
    geometric = disc_action_subgroup(ctx.NS, [ctx.to_ns(ctx.order8_p)], disc)
    return (from_matrix == geometric,
            f"orders {from_matrix.order} and {geometric.order} on a group with invariants "
            f"{list(disc.invariant_factors)}")


def check_commutation(ctx):
    F, I = ctx.F, ctx.I
    n = len(I)
    one = [[int(i == j) for j in range(n)] for i in range(n)]
    commute = mat_mul(F, I) == mat_mul(I, F)
    involution = mat_mul(I, I) == one
    return commute and involution, f"commute={commute} involution={involution}"


def check_neighbor_class(ctx):
    e_new = ctx.F[0]
    e1 = [int(i == 0) for i in range(len(ctx.G))]
    norm = ctx.LB.norm(e_new)
    pairing = ctx.LB.pair(e_new, e1)
    return norm == 0 and pairing == 2, f"e'^2 = {norm}, e'.e1 = {pairing}"


# fibres and sections ---------------------------------------------------------------

def _fiber_summary(cfg):
    red = cfg.reducible()
    kinds = sorted({(f.kodaira, f.root_lattice) for f in red})
    at_infinity = [f for f in cfg.fibers if f.place.is_infinity]
    ok = (len(red) == 8 and kinds == [("III", "A1")] and not at_infinity
          and cfg.total_disc_degree == 24)
    return ok, (f"{len(red)} reducible fibres of type {kinds}, infinity "
                f"{'bad' if at_infinity else 'good'}, total discriminant degree {cfg.total_disc_degree}")


def check_fibers_p(ctx):
    return _fiber_summary(ctx.config_p)


def check_fibers_K(ctx):
    return _fiber_summary(ctx.config_K)


def check_sections_on_curve(ctx):
    n_p, n_K = len(ctx.sections_p), len(ctx.sections_K)
    return n_p == 8 and n_K == 8, f"{n_p} sections over F_{ctx.p} and {n_K} over K verified"


def check_lifts_reduce(ctx):
    if ctx.p != ctx.fx.reduction_prime:
        return None, f"printed sections are given over F_{ctx.fx.reduction_prime} only"
    reduced = [ctx.reduction.section(ctx.model_p, P) for P in ctx.sections_K]
    hits = sum(a == b for a, b in zip(reduced, ctx.sections_p))
    return hits == 8, f"{hits}/8 lifts reduce to the printed sections (root {ctx.reduction.root})"


# Gram, classes and pushforwards ---------------------------------------------------------

def _compare_matrices(A, B):
    bad = sum(a != b for ra, rb in zip(A, B) for a, b in zip(ra, rb))
    total = len(B) * len(B[0])
    return bad == 0, f"{total - bad}/{total} entries agree"


def check_gram_p(ctx):
    return _compare_matrices(ctx.gram_p, ctx.G)


def check_gram_K(ctx):
    if not ctx.char0:
        return None, "number-field recomputation needs --char0"
    from .ellsurf import NSBasisSpec, Place, ns_gram_assemble
    basis = NSBasisSpec([Place.at(ctx.K, t) for t in ctx.roots_K], ctx.sections_K)
    return _compare_matrices(ns_gram_assemble(ctx.model_K, basis, ctx.config_K), ctx.G)


def check_lattice_invariants(ctx):
    det, sig = ctx.LB.det, ctx.LB.signature()
    ns_det = ctx.NS.det
    h2 = ctx.LB.norm(ctx.fx.h)
    ok = abs(det) == 1024 and tuple(sig) == (1, 17) and abs(ns_det) == 256 and h2 == 4
    return ok, f"det {det}, signature {tuple(sig)}, overlattice det {ns_det}, h^2 = {h2}"


def check_torsion_class(ctx):
    from .ellsurf import ns_class_of_divisor
    v = ns_class_of_divisor(ctx.model_p, ctx.basis_p, ctx.gram_p, ctx.torsion_p, config=ctx.config_p)
    return v == ctx.fx.p2, "class of (0, 0) " + _same(v, ctx.fx.p2)


def check_iota(ctx):
    return _compare_matrices(ctx.iota_p, ctx.I)


def check_mordell_weil(ctx):
    from .ellsurf import trivial_lattice_and_mw, two_torsion
    data = trivial_lattice_and_mw(ctx.G, ctx.NS.basis, list(range(10)))
    torsion = [(P.x, P.y) for P in two_torsion(ctx.model_K)]
    zero = ctx.model_K.F.zero()
    ok = data.free_rank == 8 and data.torsion == [2] and torsion == [(zero, zero)]
    return ok, f"NS/Triv = {data.quotient_label()}, {len(torsion)} two-torsion section(s)"


# hyperbolic geometry, invariant lattice, genus --------------------------------------------

def check_slices(ctx):
    from .hypgeo import pairing_nonnegative_filter, slice_vectors, span_rank
    P = ctx.polarized
    c1 = len(slice_vectors(P, 1, 0))
    c2 = len(slice_vectors(P, 2, 0))
    D1 = slice_vectors(P, 1, -2)
    D2 = slice_vectors(P, 2, -2, pairing_nonnegative_filter(ctx.NS, D1))
    got = (c1, c2, len(D1), span_rank(D1), len(D2))
    return got == (0, 2, 32, 14, 160), "isotropic h.e=1: {}, h.e=2: {}, |D1| = {} (span rank {}), |D2| = {}".format(*got)


def check_invariant_lattice(ctx):
    from fractions import Fraction
    inv, _ = ctx.iota_split
    half = inv.scaled(Fraction(1, 2))
    ok = inv.rank == 10 and half.is_even() and abs(half.det) == 1 and tuple(half.signature()) == (1, 9)
    return ok, f"rank {inv.rank}, half-scaled: even={half.is_even()} det {half.det} signature {tuple(half.signature())}"


def check_coinvariant_lattice(ctx):
    from .qlattice import enumerate_vectors, lattice_minimum
    _, co = ctx.iota_split
    roots = len(enumerate_vectors(co, -2).vectors)
    minimum = lattice_minimum(co)
    ok = co.rank == 8 and co.is_negative_definite() and abs(co.det) == 1024 and roots == 0 and minimum == -4
    return ok, f"rank {co.rank}, det {co.det}, negative definite={co.is_negative_definite()}, {roots} roots, minimum {minimum}"


def check_genus(ctx):
    from .qlattice import kneser_neighbors_and_genus, lattice_minimum
    _, co = ctx.iota_split
    reps = kneser_neighbors_and_genus(co, 3)
    maxima = sorted(int(lattice_minimum(r)) for r in reps)
    return len(reps) == 3 and maxima == [-4, -2, -2], f"{len(reps)} classes with maxima {maxima}"


# Salem numbers ---------------------------------------------------------------------

def _salem_check(ctx, name, lo, hi):
    from .salem import is_salem
    ok, interval = is_salem(ctx.fx.salem_polynomial(name))
    inside = ok and lo < interval.lo and interval.hi < hi
    return inside, f"Salem={ok}, root in {interval}"


def check_tau8(ctx):
    from fractions import Fraction
    return _salem_check(ctx, "tau8", Fraction(158233, 100000), Fraction(158235, 100000))


def check_lehmer(ctx):
    from fractions import Fraction
    return _salem_check(ctx, "lehmer", Fraction(117627, 100000), Fraction(117629, 100000))


# projective representation ---------------------------------------------------------------

def check_group(ctx):
    from .projrep import closure_order_center, same_class
    K = ctx.fx.cyclotomic_field
    gens = ctx.fx.projrep_generators()
    order, center, G = closure_order_center(K, gens)
    square = G.multiply(gens[0], gens[0])
    expected = [G.identity, square]
    ok = order == 128 and len(center) == 2 and all(any(same_class(c, e) for e in expected) for c in center)
    return ok, f"order {order}, center of size {len(center)}"


def check_relative_invariants(ctx):
    from .projrep import closure_order_center, relative_invariant_character
    K = ctx.fx.cyclotomic_field
    _, _, G = closure_order_center(K, ctx.fx.projrep_generators())
    chars = {name: relative_invariant_character(ctx.fx.projrep_form(name), G.elements)
             for name in ("q", "b")}
    ok = all(v is not None for v in chars.values())
    return ok, ", ".join(f"{k} {'is' if v is not None else 'is not'} a relative invariant"
                         for k, v in chars.items())


def check_lemma(ctx):
    from .projrep import lemma_identity_check
    r = lemma_identity_check(ctx.fx.cyclotomic_field)
    return r.ok, f"pullback identity={r.pullback_identity}, 2-form scalar {r.form_scalar}, order {r.action_order}"


def check_diagonal(ctx):
    from .projrep import diagonal_discriminant
    r = diagonal_discriminant(ctx.fx.projrep_terms("b"), ctx.fx.cyclotomic_field)
    return r.ok, f"restriction matches={r.restriction_ok}, discriminant {r.discriminant}"


# quartic, coordinate changes and the Enriques quotient ---------------------------------------

def check_quartic(ctx):
    from .ellsurf import quartic_to_weierstrass, verify_round_trip, weierstrass_isomorphism
    coeffs, point = ctx.fx.quartic()
    T = quartic_to_weierstrass(ctx.K, coeffs, point)
    iso = weierstrass_isomorphism(T.model, ctx.model_K, candidates=ctx.roots_K + [ctx.fx.sqrt2])
    trip = verify_round_trip(T, coeffs)
    return iso is not None and trip, f"isomorphic to E1: {iso is not None}, round trip: {trip}"


def check_zeta16(ctx):
    from .ellsurf import scaling_substitution_relates
    L = NumberField([1, 0, 0, 0, 0, 0, 0, 0, 1], "z")
    z = L.gen()
    ok = scaling_substitution_relates(ctx.fx.short_model("first", L), ctx.fx.e1(L), -z ** 4, -z ** 2, z)
    return ok, "(x, y, t) -> (-z^4 x, -z^2 y, z t) relates the two equations" if ok else "no relation"


@dataclass
class _Kappa:
    x: object
    y: object
    t: object
    images: dict
    involuted: dict


def _kappa(ctx):
    from .ellsurf import CoverFunctionField
    F = CoverFunctionField.weierstrass(ctx.model_K)
    x, y, t = F.gens()
    A = 1 - t ** 8
    identity = (x, y, t)
    involution = (A / x, -(A * y) / (x * x), -t)

    def evaluate(terms, imgs):
        num, den = terms
        return F.evaluate(num, imgs) / F.evaluate(den, imgs)

    terms = ctx.fx.kappa_terms()
    return F, _Kappa(x, y, t, {k: evaluate(v, identity) for k, v in terms.items()},
                     {k: evaluate(v, involution) for k, v in terms.items()})


def check_kappa_invariance(ctx):
    _, k = _kappa(ctx)
    same = [name for name in k.images if k.images[name] == k.involuted[name]]
    return len(same) == 3, f"invariant components: {same}"


def check_enriques_equation(ctx):
    from .ellsurf import function_field_identity
    F, k = _kappa(ctx)
    X, Y, S = k.images["xtilde"], k.images["ytilde"], k.images["s"]
    base = S == k.t * k.t
    eq = function_field_identity(F, Y * Y, S * X ** 4 + S ** 7 - S ** 3)
    return base and eq, f"s = t^2: {base}, image satisfies the quotient equation: {eq}"


# specialisation --------------------------------------------------------------------

def check_places(ctx):
    from .specialize import degree_one_roots
    at_p = degree_one_roots(ctx.K, ctx.fx.reduction_prime)
    at_alt = degree_one_roots(ctx.K, ctx.fx.alternate_prime)
    ok = bool(at_p) and bool(at_alt)
    return ok, (f"{len(at_p)} degree-one places over {ctx.fx.reduction_prime}, "
                f"{len(at_alt)} over {ctx.fx.alternate_prime}")


def check_reduction_errors(ctx):
    from fractions import Fraction
    from .specialize import find_degree_one_place
    notes = []
    try:
        find_degree_one_place(NumberField([1, 0, 1], "i"), 3)
        notes.append("Q(i) at 3 accepted")
    except NoDegreeOnePlace:
        pass
    try:
        ctx.reduction.scalar(Fraction(1, ctx.p))
        notes.append(f"1/{ctx.p} accepted")
    except NotAdmissible:
        pass
    return not notes, "; ".join(notes) or "inert prime and bad denominator rejected"


def check_eighth_roots(ctx):
    r = ctx.roots_p
    eighth = all(t ** 8 == ctx.Fp.one() for t in r)
    distinct = len({int(t.v) for t in r}) == 8
    return eighth and distinct, f"reduced roots {[int(t.v) for t in r]}"


def check_equivariance(ctx):
    from .specialize import equivariance_check
    from .ellsurf import base_involution, translate_by_origin_torsion
    R, Wp, WK = ctx.reduction, ctx.model_p, ctx.model_K
    quantities = [("model", R.model(WK), Wp)]
    for i, P in enumerate(ctx.sections_K):
        image = translate_by_origin_torsion(WK, base_involution(WK, P))
        image_p = translate_by_origin_torsion(Wp, base_involution(Wp, R.section(Wp, P)))
        quantities.append((f"iota(s{i + 1})", R.section(Wp, image), image_p))
    report = equivariance_check(quantities)
    bad = [name for name, eq, _ in report.entries if not eq]
    return report.ok, f"{len(report.entries)} quantities commute with reduction" if report.ok else f"mismatch: {bad}"


def check_section_p(ctx):
    from .ellsurf import check_on_curve
    P = ctx.fx.section_p(ctx.model_K)
    try:
        check_on_curve(ctx.model_K, P)
    except Exception:
        return None, "the printed section P does not satisfy the E1 equation; translation by it is not checked"
    return True, "section P lies on E1"


SUITE_CHECKS = {
    "sanity": [
        ("sanity.1-isometry", check_isometry),
        ("sanity.2-spectral-radius", check_spectral_radius),
        ("sanity.3-nef-cone", check_nef_cone),
        ("sanity.4-discriminant-action", check_discriminant_action),
        ("sanity.5-commutes-with-involution", check_commutation),
        ("sanity.6-neighbor-fiber-class", check_neighbor_class),
    ],
    "fibers": [
        ("fibers.1-tate-over-Fp", check_fibers_p),
        ("fibers.2-tate-over-K", check_fibers_K),
        ("fibers.3-sections-on-curve", check_sections_on_curve),
        ("fibers.4-lifts-reduce", check_lifts_reduce),
    ],
    "gram": [
        ("gram.1-gram-over-Fp", check_gram_p),
        ("gram.2-gram-over-K", check_gram_K),
        ("gram.3-lattice-invariants", check_lattice_invariants),
        ("gram.4-torsion-class", check_torsion_class),
        ("gram.5-involution-pushforward", check_iota),
        ("gram.6-mordell-weil", check_mordell_weil),
    ],
    "vinberg": [("vinberg.1-slices", check_slices)],
    "enriques": [
        ("enriques.1-invariant-lattice", check_invariant_lattice),
        ("enriques.2-coinvariant-lattice", check_coinvariant_lattice),
    ],
    "genus": [("genus.1-kneser-3-neighbors", check_genus)],
    "salem": [
        ("salem.1-tau8", check_tau8),
        ("salem.2-lehmer", check_lehmer),
    ],
    "projrep": [
        ("projrep.1-group-order-center", check_group),
        ("projrep.2-relative-invariants", check_relative_invariants),
        ("projrep.3-two-form-lemma", check_lemma),
        ("projrep.4-diagonal-discriminant", check_diagonal),
    ],
    "kappa": [
        ("kappa.1-quartic-to-weierstrass", check_quartic),
        ("kappa.2-zeta16-coordinate-change", check_zeta16),
        ("kappa.3-quotient-map-invariance", check_kappa_invariance),
        ("kappa.4-quotient-equation", check_enriques_equation),
    ],
    "specialize": [
        ("specialize.1-degree-one-places", check_places),
        ("specialize.2-rejections", check_reduction_errors),
        ("specialize.3-eighth-roots", check_eighth_roots),
        ("specialize.4-equivariance", check_equivariance),
        ("specialize.5-section-p", check_section_p),
    ],
}


def run_check(ctx, check_id, fn):
    start = time.perf_counter()
    try:
        passed, details = fn(ctx)
    except Exception as exc:    # a crashing check is a failed check
        passed, details = False, f"{type(exc).__name__}: {exc}"
    status = "skip" if passed is None else ("pass" if passed else "fail")
    return CheckResult(check_id, status, details, time.perf_counter() - start)


def run_suite(name, fixtures=None, prime=113, char0=False, context=None):
    if name != "all" and name not in SUITE_CHECKS:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    ctx = context or Context(fixtures, prime, char0)
    names = SUITES if name == "all" else (name,)
    report = CheckReport(name)
    for suite in names:
        for check_id, fn in SUITE_CHECKS[suite]:
            report.checks.append(run_check(ctx, check_id, fn))
    return report
