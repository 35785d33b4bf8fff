import random

import pytest

from qtrace3d.coefficients import Coeff, CyclotomicSpec
from qtrace3d.fixture import COMPLETE_SHAPES, figure_eight
from qtrace3d.gluing_module import (
    GluingPresentation,
    edge_generator,
    edge_monomial,
    expand_certificate,
    lagrangian_generator,
    _scale_ring,
)
from qtrace3d.quantum_torus import SkewForm, TorusElement
from qtrace3d.shapes import accepted_lifts, shape_triple


def presentation():
    return GluingPresentation(figure_eight())


def random_element(rng, form, size=5, span=4):
    t = TorusElement.zero(form)
    for _ in range(rng.randint(1, size)):
        k = tuple(rng.randint(-span, span) for _ in range(form.rank))
        c = Coeff.make({rng.randint(-3, 3): (rng.randint(-3, 3), rng.randint(-3, 3))})
        t = t + TorusElement.monomial(form, k, c)
    return t


def test_edge_monomials_of_the_fixture():
    tri = figure_eight()
    form = SkewForm.standard_blocks(2)
    w0 = edge_monomial(tri, form, 0)
    w1 = edge_monomial(tri, form, 1)
    assert w0.support() == [(1, -1, 1, -1)]
    assert w1.support() == [(-1, 1, -1, 1)]
    # each is -q^2 times the Weyl monomial; the two edge relations multiply
    # to a scalar (total angle around both edges)
    assert w0.terms[(1, -1, 1, -1)] == -Coeff.q_power(2)


def test_edge_relation_vanishes_at_lifted_solutions():
    tri = figure_eight()
    form = SkewForm.standard_blocks(2)
    lifts = accepted_lifts(tri, list(COMPLETE_SHAPES))
    for lift in lifts:
        values = [v for pair in lift for v in pair]
        for e in range(2):
            g = edge_generator(tri, form, e)
            assert abs(g.at_numeric(1.0, values)) < 1e-9


def test_normal_form_certificates_re_expand():
    pres = presentation()
    rng = random.Random(0)
    for _ in range(40):
        x = random_element(rng, pres.form)
        ge = pres.normal_form(x)
        back = ge.representative
        for j, u in ge.lagrangian_cofactors.items():
            back = back + u * pres.lagrangians[j]
        assert (back - x).is_zero()
        for k in ge.representative.terms:
            assert k[0] >= -1 and k[2] >= -1


def test_normal_form_is_confluent_and_idempotent():
    pres = presentation()
    rng = random.Random(1)
    for trial in range(25):
        x = random_element(rng, pres.form)
        nf = pres.normal_form(x).representative
        nf_rand = pres.normal_form(x, rng=random.Random(trial)).representative
        assert (nf - nf_rand).is_zero()
        again = pres.normal_form(nf)
        assert (again.representative - nf).is_zero()
        assert all(u.is_zero() for u in again.lagrangian_cofactors.values())


def test_normal_form_preserves_lifted_evaluation():
    tri = figure_eight()
    pres = GluingPresentation(tri)
    lifts = accepted_lifts(tri, list(COMPLETE_SHAPES))
    values = [v for pair in lifts[0] for v in pair]
    rng = random.Random(2)
    for _ in range(10):
        x = random_element(rng, pres.form)
        nf = pres.normal_form(x).representative
        assert abs(x.at_numeric(1.0, values) - nf.at_numeric(1.0, values)) < 1e-10


def test_greedy_reduce_certificates_re_expand():
    pres = presentation()
    rng = random.Random(3)
    for _ in range(20):
        x = random_element(rng, pres.form)
        ge = pres.greedy_reduce(pres.normal_form(x))
        back = ge.representative
        for j, u in ge.lagrangian_cofactors.items():
            back = back + u * pres.lagrangians[j]
        for e, v in ge.edge_cofactors.items():
            back = back + pres.edges[e] * v
        assert (back - x).is_zero()


def test_membership_of_generators():
    pres = presentation()
    for g in pres.lagrangians + pres.edges:
        report = pres.bounded_membership(g, 1)
        assert report["verdict"] == "yes"


def test_membership_certificate_re_expands():
    pres = presentation()
    x = pres.edges[0] * pres.lagrangians[1] + pres.lagrangians[0]
    report = pres.bounded_membership(x, 2)
    assert report["verdict"] == "yes"
    lhs, delta = expand_certificate(pres, report["certificate"], x)
    assert (lhs - _scale_ring(x, delta)).is_zero()


def test_one_is_not_in_the_ideal_at_small_bound():
    pres = presentation()
    report = pres.bounded_membership(TorusElement.one(pres.form), 2)
    assert report["verdict"] == "no-at-bound"


def test_specialized_presentation_membership():
    tri = figure_eight()
    spec = CyclotomicSpec(8)
    pres = GluingPresentation(tri, spec)
    report = pres.bounded_membership(pres.lagrangians[0], 1)
    assert report["verdict"] == "yes"
    one = pres.convert(TorusElement.one(SkewForm.standard_blocks(2)))
    assert pres.bounded_membership(one, 3)["verdict"] == "no-at-bound"


def test_lagrangian_generator_vanishes_classically():
    # z^{-2} + (z'')^2 - 1 = 0 is the square-root form of z z' relation
    tri = figure_eight()
    lifts = accepted_lifts(tri, list(COMPLETE_SHAPES))
    for lift in lifts:
        for j, (rz, rw) in enumerate(lift):
            assert abs(rz ** -2 + rw ** 2 - 1) < 1e-9
