import random

from qtrace3d.classical import (
    classical_trace,
    classical_trace_element,
    commutative_form,
    mat_mul,
    mat_trace,
    transit_matrix,
)
from qtrace3d.fixture import (
    COMPLETE_SHAPES,
    figure_eight,
    longitude_transits,
    meridian_transits,
)
from qtrace3d.lantern import Anchor, TrivialLoop, resolve_word
from qtrace3d.shapes import accepted_lifts


def complete_lift():
    tri = figure_eight()
    lifts = accepted_lifts(tri, list(COMPLETE_SHAPES))
    assert lifts
    return tri, lifts[0]


def test_peripheral_traces_at_complete_structure():
    # both peripheral curves of the complete structure are parabolic:
    # |tr| = 2
    tri, lift = complete_lift()
    for transits in (meridian_transits(), longitude_transits()):
        value = classical_trace(tri.num_tetrahedra, list(transits), lift)
        assert abs(abs(value) - 2) < 1e-8


def test_trace_is_cyclic_rotation_invariant():
    tri, lift = complete_lift()
    rng = random.Random(4)
    words = ["Aa", "BaBa", "aBAaba", "AAGaAg"]
    for w in words:
        transits = list(resolve_word(tri, Anchor(0, 0, 0), w))
        base = classical_trace(tri.num_tetrahedra, transits, lift)
        for r in range(1, len(transits)):
            rot = transits[r:] + transits[:r]
            rotated = classical_trace(tri.num_tetrahedra, rot, lift)
            assert abs(base - rotated) < 1e-9


def test_trivial_loop_scalar():
    tri, lift = complete_lift()
    value = classical_trace(tri.num_tetrahedra, [TrivialLoop(0)], lift)
    assert abs(value - (-2)) < 1e-12


def test_trace_element_is_trace_of_matrix_product():
    tri, lift = complete_lift()
    form = commutative_form(tri.num_tetrahedra)
    transits = list(meridian_transits())
    prod = transit_matrix(form, transits[0])
    for t in transits[1:]:
        prod = mat_mul(prod, transit_matrix(form, t))
    el = classical_trace_element(tri.num_tetrahedra, transits)
    assert (mat_trace(prod) - el).is_zero()
