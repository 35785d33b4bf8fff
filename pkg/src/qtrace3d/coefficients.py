"""Exact coefficient arithmetic.

The ground ring for everything in this package is R = Z[i][q^{1/2}, q^{-1/2}]:
Laurent polynomials in a formal square root of q, with Gaussian-integer
coefficients.  Half-integer powers of q are stored as integer powers of
s = q^{1/2}, so all exponents in this module are exponents of s.

Specializations (q = 1, q a root of unity, q a numeric complex value) are
applied at comparison time; all intermediate computation stays universal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd


Gaussian = tuple[int, int]  # a + b*i


def _gauss_mul(x: Gaussian, y: Gaussian) -> Gaussian:
    a, b = x
    c, d = y
    return (a * c - b * d, a * d + b * c)


def _gauss_add(x: Gaussian, y: Gaussian) -> Gaussian:
    return (x[0] + y[0], x[1] + y[1])


@dataclass(frozen=True)
class Coeff:
    """An element of Z[i][q^{±1/2}], as a map s-exponent -> Gaussian integer.

    Instances are immutable; ``terms`` is a tuple of (exponent, (a, b)) pairs
    sorted by exponent with no zero coefficients.

    >>> (Coeff.q_half(1) + Coeff.i()) * Coeff.q_half(-1)
    Coeff('i*s^-1 + 1')
    """

    terms: tuple[tuple[int, Gaussian], ...]

    # -- constructors -------------------------------------------------

    @staticmethod
    def make(d: dict[int, Gaussian]) -> "Coeff":
        return Coeff(tuple(sorted((e, g) for e, g in d.items() if g != (0, 0))))

    @staticmethod
    def zero() -> "Coeff":
        return Coeff(())

    @staticmethod
    def one() -> "Coeff":
        return Coeff(((0, (1, 0)),))

    @staticmethod
    def integer(n: int) -> "Coeff":
        return Coeff.make({0: (n, 0)})

    @staticmethod
    def gauss(a: int, b: int, s_exp: int = 0) -> "Coeff":
        return Coeff.make({s_exp: (a, b)})

    @staticmethod
    def i(power: int = 1) -> "Coeff":
        g = [(1, 0), (0, 1), (-1, 0), (0, -1)][power % 4]
        return Coeff.make({0: g})

    @staticmethod
    def q_half(n: int) -> "Coeff":
        """q^{n/2}, i.e. s^n."""
        return Coeff.make({n: (1, 0)})

    @staticmethod
    def q_power(n: int) -> "Coeff":
        return Coeff.q_half(2 * n)

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "Coeff") -> "Coeff":
        d = dict(self.terms)
        for e, g in other.terms:
            d[e] = _gauss_add(d.get(e, (0, 0)), g)
        return Coeff.make(d)

    def __neg__(self) -> "Coeff":
        return Coeff(tuple((e, (-a, -b)) for e, (a, b) in self.terms))

    def __sub__(self, other: "Coeff") -> "Coeff":
        return self + (-other)

    def __mul__(self, other: "Coeff") -> "Coeff":
        d: dict[int, Gaussian] = {}
        for e1, g1 in self.terms:
            for e2, g2 in other.terms:
                e = e1 + e2
                d[e] = _gauss_add(d.get(e, (0, 0)), _gauss_mul(g1, g2))
        return Coeff.make(d)

    def __pow__(self, n: int) -> "Coeff":
        if n < 0:
            return self.inverse() ** (-n)
        out = Coeff.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def inverse(self) -> "Coeff":
        """Inverse of a unit (single term with unit Gaussian coefficient)."""
        if len(self.terms) != 1:
            raise ZeroDivisionError(f"not a unit: {self}")
        e, (a, b) = self.terms[0]
        if (a, b) == (1, 0):
            g = (1, 0)
        elif (a, b) == (-1, 0):
            g = (-1, 0)
        elif (a, b) == (0, 1):
            g = (0, -1)
        elif (a, b) == (0, -1):
            g = (0, 1)
        else:
            raise ZeroDivisionError(f"not a unit: {self}")
        return Coeff(((-e, g),))

    # -- specializations ----------------------------------------------

    def at_q_one(self) -> Gaussian:
        out = (0, 0)
        for _e, g in self.terms:
            out = _gauss_add(out, g)
        return out

    def at_numeric(self, s: complex) -> complex:
        """Evaluate with q^{1/2} = s numerically."""
        return sum((a + 1j * b) * s**e for e, (a, b) in self.terms) + 0j

    def shift(self, n: int) -> "Coeff":
        """Multiply by s^n."""
        return Coeff(tuple((e + n, g) for e, g in self.terms))

    def stretch(self, n: int) -> "Coeff":
        """Substitute s -> s^n (used by the Frobenius coefficient repair)."""
        return Coeff(tuple(sorted((e * n, g) for e, g in self.terms)))

    def __repr__(self) -> str:
        if not self.terms:
            return "Coeff('0')"
        parts = []
        for e, (a, b) in self.terms:
            if b == 0:
                c = str(a)
            elif a == 0:
                c = {1: "i", -1: "-i"}.get(b, f"{b}i")
            else:
                c = f"({a}{b:+}i)"
            if e == 0:
                parts.append(c)
            else:
                cc = {"1": "", "-1": "-"}.get(c, c + "*")
                parts.append(f"{cc}s^{e}")
        return f"Coeff('{' + '.join(parts)}')"


ZERO = Coeff.zero()
ONE = Coeff.one()


# ---------------------------------------------------------------------------
# Cyclotomic integers Z[y] / Phi_M(y)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def cyclotomic_coeffs(M: int) -> tuple[int, ...]:
    """Integer coefficients of the M-th cyclotomic polynomial, low to high."""
    # Phi_M(x) = prod_{d | M} (x^d - 1)^{mu(M/d)}; compute by exact division.
    poly = [1]  # running product of (x^d - 1)^{mu}
    # numerator first
    def mul_by(p: list[int], d: int) -> list[int]:
        out = [0] * (len(p) + d)
        for i, c in enumerate(p):
            out[i + d] += c
            out[i] -= c
        return out

    def div_by(p: list[int], d: int) -> list[int]:
        # exact division by (x^d - 1)
        out = [0] * (len(p) - d)
        rem = list(p)
        for i in range(len(out) - 1, -1, -1):
            c = rem[i + d]
            out[i] = c
            rem[i + d] -= c
            rem[i] += c
        assert all(c == 0 for c in rem), "inexact cyclotomic division"
        return out

    def mobius(n: int) -> int:
        res, p = 1, 2
        while p * p <= n:
            if n % p == 0:
                n //= p
                if n % p == 0:
                    return 0
                res = -res
            p += 1
        if n > 1:
            res = -res
        return res

    divisors = [d for d in range(1, M + 1) if M % d == 0]
    for d in divisors:
        if mobius(M // d) == 1:
            poly = mul_by(poly, d)
    for d in divisors:
        if mobius(M // d) == -1:
            poly = div_by(poly, d)
    while poly and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


class CyclotomicRing:
    """Z[y]/Phi_M(y): exact arithmetic with the primitive M-th root y.

    Elements are tuples of ints of length deg(Phi_M).  Requires 4 | M so the
    Gaussian unit embeds as i = y^(M/4).
    """

    def __init__(self, M: int):
        if M % 4 != 0:
            raise ValueError("CyclotomicRing requires 4 | M")
        self.M = M
        phi = cyclotomic_coeffs(M)
        self.phi = phi
        self.deg = len(phi) - 1
        # Precompute reductions of y^k for k in [deg, 2*deg-1].
        self._pow_table: list[tuple[int, ...]] = []
        cur = [-c for c in phi[:-1]]  # y^deg
        for _ in range(self.deg):
            self._pow_table.append(tuple(cur))
            nxt = [0] + cur
            lead = nxt.pop()  # coefficient of y^deg after shifting
            if lead:
                for i in range(self.deg):
                    nxt[i] -= lead * phi[i]
            cur = nxt
        self._root_powers: list[tuple[int, ...]] = []
        v = self.one()
        for _ in range(M):
            self._root_powers.append(v)
            v = self.mul(v, self.root())

    # -- element constructors --

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.deg

    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.deg - 1)

    def integer(self, n: int) -> tuple[int, ...]:
        return (n,) + (0,) * (self.deg - 1)

    def root(self) -> tuple[int, ...]:
        if self.deg == 1:
            # M = 1 or 2 never occur here (4 | M); guard anyway.
            return self._pow_table[0]
        return (0, 1) + (0,) * (self.deg - 2)

    def root_power(self, k: int) -> tuple[int, ...]:
        return self._root_powers[k % self.M]

    def i_unit(self) -> tuple[int, ...]:
        return self.root_power(self.M // 4)

    def gauss(self, g: Gaussian) -> tuple[int, ...]:
        a, b = g
        return self.add(self.integer(a), self.scale(self.i_unit(), b))

    # -- arithmetic --

    def add(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def neg(self, x):
        return tuple(-a for a in x)

    def scale(self, x, n: int):
        return tuple(n * a for a in x)

    def mul(self, x, y):
        d = self.deg
        conv = [0] * (2 * d - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        conv[i + j] += a * b
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                red = self._pow_table[k - d]
                for i in range(d):
                    out[i] += c * red[i]
        return tuple(out)

    def power(self, x, n: int):
        out = self.one()
        while n:
            if n & 1:
                out = self.mul(out, x)
            x = self.mul(x, x)
            n >>= 1
        return out

    def is_zero(self, x) -> bool:
        return all(a == 0 for a in x)

    def numeric(self, x) -> complex:
        import cmath

        y = cmath.exp(2j * cmath.pi / self.M)
        return sum(a * y**k for k, a in enumerate(x))


class CyclotomicSpec:
    """A specialization q^{1/2} |-> y^k inside Z[y]/Phi_M(y).

    ``order`` is the multiplicative order m of the image of q^{1/2}.  The
    ambient M is lcm(m, 4) so that the Gaussian unit is available.
    """

    def __init__(self, order: int):
        self.m = order
        self.M = 4 * order // gcd(4, order)
        self.ring = CyclotomicRing(self.M)
        self.s_exp = self.M // order  # q^{1/2} = y^(s_exp)

    def coeff(self, c: Coeff, *, s_exp: int | None = None, i_image=None):
        """Image of a universal coefficient; optionally override the images
        of q^{1/2} (as a power of y) and of the Gaussian unit."""
        R = self.ring
        se = self.s_exp if s_exp is None else s_exp
        ii = R.i_unit() if i_image is None else i_image
        out = R.zero()
        for e, (a, b) in c.terms:
            g = R.add(R.integer(a), R.scale(ii, b))
            out = R.add(out, R.mul(g, R.root_power(e * se)))
        return out


if __name__ == "__main__":
    import doctest

    doctest.testmod()
