"""Acceptance criteria 1-19, one test each.

Every test records a one-line verdict; the lines are printed together at
the end of the pytest run (see conftest.py) and also when this file is run
as a script:  python tests/test_acceptance.py
"""

import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from exactk3 import checks  # noqa: E402
from exactk3.checks import Context  # noqa: E402
from exactk3.ellsurf import add  # noqa: E402

RESULTS = []


@pytest.fixture(scope="module")
def actx(fx):
    return Context(fx, char0=True)


def run(number, title, *fns, ctx, budget):
    """Run checks for one criterion, record its line, and assert."""
    start = time.perf_counter()
    details, ok = [], True
    for fn in fns:
        try:
            passed, text = fn(ctx)
        except Exception as exc:
            passed, text = False, f"{type(exc).__name__}: {exc}"
        ok = ok and passed is True
        details.append(text)
    elapsed = time.perf_counter() - start
    in_time = elapsed <= budget
    status = "PASS" if ok and in_time else "FAIL"
    timing = f"{elapsed:.1f}s/{budget}s" + ("" if in_time else " over budget")
    RESULTS.append(f"[{status}] criterion {number:>2} {title}: {'; '.join(details)} ({timing})")
    assert ok, details
    assert in_time, f"took {elapsed:.1f}s, budget {budget}s"


def test_01_isometry(actx):
    run(1, "pushforward is an isometry", checks.check_isometry, ctx=actx, budget=1)


def test_02_spectral_radius(actx):
    run(2, "Salem factor and spectral radius", checks.check_spectral_radius, ctx=actx, budget=5)


def test_03_nef_cone(actx):
    run(3, "nef cone preserved", checks.check_nef_cone, ctx=actx, budget=30)


def test_04_discriminant_action(actx):
    run(4, "discriminant action subgroup", checks.check_discriminant_action, ctx=actx, budget=60)


def test_05_commutation(actx):
    run(5, "commutes with the involution", checks.check_commutation, ctx=actx, budget=1)


def test_06_neighbor_class(actx):
    run(6, "isotropic first row, pairing 2", checks.check_neighbor_class, ctx=actx, budget=1)


def test_07_fibers(actx):
    run(7, "eight type III fibres over F_p and K", checks.check_fibers_p, checks.check_fibers_K,
        ctx=actx, budget=10)


def test_08_sections(actx):
    run(8, "sections on the curve, lifts reduce", checks.check_sections_on_curve,
        checks.check_lifts_reduce, ctx=actx, budget=10)


def test_09_gram(actx):
    run(9, "Gram over F_p", checks.check_gram_p, ctx=actx, budget=60)
    run(9, "Gram over K", checks.check_gram_K, ctx=actx, budget=300)


def test_10_lattice_invariants(actx):
    run(10, "determinants, signature, h^2", checks.check_lattice_invariants, ctx=actx, budget=1)


def test_11_torsion_class(actx):
    run(11, "class of the 2-torsion section", checks.check_torsion_class, ctx=actx, budget=5)


def test_12_involution(actx):
    run(12, "involution pushforward matrix", checks.check_iota, ctx=actx, budget=60)


def test_13_invariant_lattices(actx):
    run(13, "invariant and coinvariant lattices", checks.check_invariant_lattice,
        checks.check_coinvariant_lattice, ctx=actx, budget=30)


def test_14_genus(actx):
    run(14, "Kneser 3-neighbour genus", checks.check_genus, ctx=actx, budget=120)


def test_15_slices(actx):
    run(15, "hyperbolic slices", checks.check_slices, ctx=actx, budget=60)


def test_16_mordell_weil(actx):
    run(16, "NS/Triv and two-torsion", checks.check_mordell_weil, ctx=actx, budget=5)


def test_17_projrep(actx):
    run(17, "projective group and identities", checks.check_group, checks.check_relative_invariants,
        checks.check_lemma, checks.check_diagonal, ctx=actx, budget=5)


def test_18_quotient(actx):
    run(18, "quartic, coordinate change, quotient map", checks.check_quartic, checks.check_zeta16,
        checks.check_kappa_invariance, checks.check_enriques_equation, ctx=actx, budget=120)


def _property_suites(ctx):
    import random
    import test_ellsurf
    import test_exactcore
    import test_qlattice
    test_qlattice.test_enumeration_matches_brute_force_box()
    W = ctx.model_p
    rng = random.Random(2024)
    pool = test_ellsurf._section_pool(ctx, rng)
    for _ in range(200):
        P, Q, R = (rng.choice(pool) for _ in range(3))
        if add(W, add(W, P, Q), R) != add(W, P, add(W, Q, R)):
            return False, "group law not associative"
    test_exactcore.test_smith_form()
    test_exactcore.test_det_agrees_with_charpoly()
    test_exactcore.test_lll_reduces_positive_definite()
    return True, "1000 enumeration cases, 200 associativity triples, SNF/charpoly/LLL properties"


def test_19_property_suites(actx):
    run(19, "property suites", _property_suites, ctx=actx, budget=120)


if __name__ == "__main__":
    from exactk3.fixtures import load_fixtures
    ctx = Context(load_fixtures(), char0=True)
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn(ctx)
            except AssertionError:
                failures += 1
    print("\n".join(RESULTS))
    sys.exit(1 if failures else 0)
