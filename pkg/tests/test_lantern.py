import pytest

from qtrace3d.fixture import MERIDIAN_WALK, figure_eight, meridian_transits
from qtrace3d.lantern import (
    Anchor,
    AlphaArc,
    BetaArc,
    CurveError,
    GammaArc,
    TrivialLoop,
    check_closed,
    circle_edges,
    corner_punctures,
    cusp_walk_transits,
    glued_location,
    resolve_word,
    rotate_edge,
)


def test_circle_edges_are_incident_to_face():
    for f in range(4):
        edges = circle_edges(f)
        assert len(edges) == 3
        for e in edges:
            assert f not in e


def test_rotate_edge_has_period_three():
    for f in range(4):
        for e in circle_edges(f):
            assert rotate_edge(f, e, 3) == e
            assert rotate_edge(f, rotate_edge(f, e, 1), -1) == e


def test_corner_punctures_is_the_shared_puncture():
    f = 0
    a, b, c = circle_edges(f)
    assert corner_punctures(f, a, b) == next(iter(a & b))
    assert corner_punctures(f, b, c) == next(iter(b & c))
    with pytest.raises(ValueError):
        corner_punctures(f, a, a)


def test_gamma_dual_pair_is_complement():
    g = GammaArc(0, 1, 2)
    assert g.dual_pair == frozenset({0, 3})


def test_glued_location_is_involutive():
    tri = figure_eight()
    for tet in range(2):
        for f in range(4):
            for e in circle_edges(f):
                loc = (tet, f, e)
                assert glued_location(tri, glued_location(tri, loc)) == loc


def test_meridian_walk_resolves_and_closes():
    tri = figure_eight()
    transits = meridian_transits()
    assert [type(t) for t in transits] == [GammaArc, GammaArc]
    check_closed(tri, list(transits))


def test_cusp_walk_entry_twists():
    tri = figure_eight()
    transits = cusp_walk_transits(tri, list(MERIDIAN_WALK))
    assert all(t.twist_out == 0 for t in transits)
    assert sorted(t.twist_in for t in transits) == [-1, 1]


def test_check_closed_rejects_mismatched_junction():
    tri = figure_eight()
    transits = meridian_transits()
    broken = [transits[0], GammaArc(transits[1].lantern,
                                    transits[1].circle_in,
                                    transits[1].circle_out,
                                    transits[1].twist_in + 1,
                                    transits[1].twist_out)]
    with pytest.raises(CurveError):
        check_closed(tri, broken)


def test_anchor_parse_round_trip():
    a = Anchor.parse("L1:C2:S0")
    assert (a.lantern, a.circle, a.slot) == (1, 2, 0)
    with pytest.raises(ValueError):
        Anchor.parse("L1:C9:S0")
    with pytest.raises(ValueError):
        Anchor.parse("nonsense")


def test_resolve_word_contractible_loop():
    tri = figure_eight()
    transits = resolve_word(tri, Anchor(0, 0, 0), "Aa")
    assert all(isinstance(t, AlphaArc) for t in transits)
    check_closed(tri, list(transits))


def test_resolve_word_rejects_two_standard_arcs_in_a_segment():
    tri = figure_eight()
    with pytest.raises(CurveError):
        resolve_word(tri, Anchor(0, 0, 0), "agga")


def test_resolve_word_rejects_long_slot_runs_without_crossing():
    tri = figure_eight()
    with pytest.raises(CurveError):
        resolve_word(tri, Anchor(0, 0, 0), "abba")


def test_resolve_word_rejects_open_curves():
    tri = figure_eight()
    with pytest.raises(CurveError):
        resolve_word(tri, Anchor(0, 0, 0), "")


def test_beta_word_produces_beta_arcs():
    tri = figure_eight()
    transits = resolve_word(tri, Anchor(0, 0, 0), "BaBa")
    kinds = {type(t) for t in transits}
    assert BetaArc in kinds
    check_closed(tri, list(transits))


def test_trivial_loop_tag():
    t = TrivialLoop(1)
    assert t.tagged()["kind"] == "loop"
