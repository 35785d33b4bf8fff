import random

import pytest

from qtrace3d.coefficients import Coeff, CyclotomicRing, CyclotomicSpec, cyclotomic_coeffs


def random_coeff(rng, size=3, span=6):
    d = {}
    for _ in range(rng.randint(0, size)):
        d[rng.randint(-span, span)] = (rng.randint(-4, 4), rng.randint(-4, 4))
    return Coeff.make(d)


def test_ring_axioms_random():
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = (random_coeff(rng) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert a * (b * c) == (a * b) * c
        assert a * b == b * a
        assert a + (-a) == Coeff.zero()


def test_units_and_powers():
    assert Coeff.i() * Coeff.i() == Coeff.integer(-1)
    assert Coeff.i() ** 4 == Coeff.one()
    assert Coeff.q_half(3) * Coeff.q_half(-3) == Coeff.one()
    u = Coeff.i() * Coeff.q_half(5)
    assert u * u.inverse() == Coeff.one()
    with pytest.raises(ZeroDivisionError):
        (Coeff.one() + Coeff.q_half(1)).inverse()


def test_specialization_consistency():
    # numeric evaluation agrees with the cyclotomic embedding
    rng = random.Random(11)
    spec = CyclotomicSpec(16)
    import cmath

    s = cmath.exp(2j * cmath.pi * spec.s_exp / spec.M)
    for _ in range(25):
        c = random_coeff(rng)
        lhs = spec.ring.numeric(spec.coeff(c))
        rhs = c.at_numeric(s)
        assert abs(lhs - rhs) < 1e-9


def test_cyclotomic_polynomials():
    assert cyclotomic_coeffs(4) == (1, 0, 1)
    assert cyclotomic_coeffs(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_coeffs(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_coeffs(1) == (-1, 1)
    # sanity against sympy on a few composite orders
    from sympy import Poly, cyclotomic_poly, symbols

    x = symbols("x")
    for M in (16, 20, 24, 36):
        ours = cyclotomic_coeffs(M)
        theirs = tuple(reversed(Poly(cyclotomic_poly(M, x), x).all_coeffs()))
        assert ours == tuple(int(c) for c in theirs)


def test_cyclotomic_ring_is_domainlike_at_roots():
    R = CyclotomicRing(16)
    y = R.root()
    assert R.is_zero(R.add(R.power(y, 8), R.one()))  # y^8 = -1
    i = R.i_unit()
    assert R.is_zero(R.add(R.mul(i, i), R.one()))  # i^2 = -1
    # i = y^4 here, and y is a unit: products of root powers never vanish
    v = R.one()
    for _ in range(16):
        v = R.mul(v, y)
        assert not R.is_zero(v)


def test_stretch_is_frobenius_pairing():
    c = Coeff.q_half(3) + Coeff.i()
    assert c.stretch(4) == Coeff.q_half(12) + Coeff.i()
