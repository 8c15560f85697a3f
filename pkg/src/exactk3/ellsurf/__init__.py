"""Elliptic surfaces in Weierstrass form over K(t)."""

from .model import (
    INFINITY, FiberConfiguration, LocalFiberData, ModelInvariants, Place, WeierstrassModel,
    fiber_configuration, finite_places, kodaira_from_valuations, local_fiber, model_invariants,
)
from .points import (
    ZERO, SurfaceSection, add, base_involution, check_on_curve, multiply, negate,
    point_arithmetic, pushforward_under_scaling, section, substitute_base, subtract,
    translate_by_origin_torsion, two_torsion,
)
from .intersect import (
    coincidence_degree, component_of_section_at, corrected_coincidence_intersection,
    fiber_singular_point, section_intersections, section_zero_intersection,
)
from .ns import (
    NSBasisSpec, TrivialLatticeData, build_pushforward_matrix, ns_class_of_divisor,
    ns_gram_assemble, section_pairings, solve_class, trivial_lattice_and_mw,
)
from .quartic import QuarticTransform, quartic_to_weierstrass, verify_round_trip
from .moebius import (
    MoebiusMap, WeierstrassIsomorphism, admissible_moebius, base_change, critical_values,
    generic_fiber_automorphisms, moebius_through, ratfunc_root, scaling_substitution_relates,
    to_short, transform_model, weierstrass_isomorphism,
)
from .funcfield import CoverFunctionField, FFElement, function_field_identity

__all__ = [
    "INFINITY", "FiberConfiguration", "LocalFiberData", "ModelInvariants", "Place",
    "WeierstrassModel", "fiber_configuration", "finite_places", "kodaira_from_valuations",
    "local_fiber", "model_invariants", "ZERO", "SurfaceSection", "add", "base_involution",
    "check_on_curve", "multiply", "negate", "point_arithmetic", "pushforward_under_scaling",
    "section", "substitute_base", "subtract", "translate_by_origin_torsion", "two_torsion",
    "coincidence_degree", "component_of_section_at", "corrected_coincidence_intersection",
    "fiber_singular_point", "section_intersections", "section_zero_intersection", "NSBasisSpec",
    "TrivialLatticeData", "build_pushforward_matrix", "ns_class_of_divisor", "ns_gram_assemble",
    "section_pairings", "solve_class", "trivial_lattice_and_mw", "QuarticTransform",
    "quartic_to_weierstrass", "verify_round_trip", "MoebiusMap", "WeierstrassIsomorphism",
    "admissible_moebius", "base_change", "critical_values", "generic_fiber_automorphisms",
    "moebius_through", "ratfunc_root", "scaling_substitution_relates", "to_short",
    "transform_model", "weierstrass_isomorphism", "CoverFunctionField", "FFElement",
    "function_field_identity",
]
