import pytest

from exactk3.errors import NonHomogeneous
from exactk3.exactcore import MultiPolyLite, NumberField
from exactk3.projrep import (ProjMatrixGroup, closure_order_center, diagonal_discriminant,
                             lemma_identity_check, relative_invariant_character,
                             root_of_unity_order, same_class)


def test_published_group(fx):
    K = fx.cyclotomic_field
    gens = fx.projrep_generators()
    order, center, G = closure_order_center(K, gens)
    assert order == 128 and len(center) == 2
    assert any(same_class(c, G.multiply(gens[0], gens[0])) for c in center)


def test_relative_invariants(fx):
    K = fx.cyclotomic_field
    z = K.gen()
    gens = fx.projrep_generators()
    chi_q = relative_invariant_character(fx.projrep_form("q"), gens)
    chi_b = relative_invariant_character(fx.projrep_form("b"), gens)
    assert chi_q == [-K.one(), K.one()]
    assert chi_b == [K.one(), -z ** 2]


def test_lemma_and_diagonal(fx):
    K = fx.cyclotomic_field
    assert lemma_identity_check(K).ok
    assert diagonal_discriminant(fx.projrep_terms("b"), K).ok


def test_non_homogeneous_rejected():
    K = NumberField([1, 0, 1], "i")
    x, y = MultiPolyLite.variables(K, ("x", "y"))
    with pytest.raises(NonHomogeneous):
        relative_invariant_character(x * x + y, [[[K.one(), K.zero()], [K.zero(), K.one()]]])


def test_small_groups():
    K = NumberField([1, 0, 1], "i")
    i = K.gen()
    one, zero = K.one(), K.zero()
    swap = [[zero, one], [one, zero]]
    diag = [[one, zero], [zero, i]]
    G = ProjMatrixGroup(K, [swap])
    assert G.order == 2
    assert ProjMatrixGroup(K, [[[i, zero], [zero, i]]]).order == 1      # scalar matrix
    assert ProjMatrixGroup(K, [diag]).order == 4
    assert root_of_unity_order(i) == 4
