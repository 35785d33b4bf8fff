"""Quantum torus arithmetic.

T(B) is generated by x_1^{±1}, ..., x_r^{±1} over R = Z[i][q^{±1/2}] with
x_i x_j = q^{B_ij} x_j x_i.  Elements are stored in the Weyl-ordered monomial
basis x^k = q^{-1/2 sum_{i<j} B_ij k_i k_j} x_1^{k_1} ... x_r^{k_r}, for which

    x^k * x^l = q^{<k,l>/2} x^{k+l},      <k,l> = sum_ij B_ij k_i l_j.

Exponent vectors are plain int tuples; coefficients are Coeff values (or
elements of a cyclotomic ring when an element has been specialized).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coefficients import Coeff, CyclotomicSpec, Gaussian


Exponent = tuple[int, ...]


@dataclass(frozen=True)
class SkewForm:
    """An integer antisymmetric matrix, the commutation form of the torus."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        r = len(self.rows)
        for i in range(r):
            for j in range(r):
                if self.rows[i][j] != -self.rows[j][i]:
                    raise ValueError("skew form must be antisymmetric")

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pairing(self, k: Exponent, l: Exponent) -> int:
        """<k, l> = sum_ij B_ij k_i l_j."""
        total = 0
        for i, ki in enumerate(k):
            if ki:
                row = self.rows[i]
                total += ki * sum(bij * lj for bij, lj in zip(row, l) if lj)
        return total

    @staticmethod
    def standard_blocks(num_blocks: int) -> "SkewForm":
        """Block-diagonal form with 2x2 blocks [[0,-1],[1,0]].

        Block j holds the generators (z_j, z''_j) of one tetrahedron, so
        z''_j z_j = q z_j z''_j.
        """
        r = 2 * num_blocks
        rows = [[0] * r for _ in range(r)]
        for j in range(num_blocks):
            rows[2 * j][2 * j + 1] = -1
            rows[2 * j + 1][2 * j] = 1
        return SkewForm(tuple(tuple(row) for row in rows))


def _exp_add(k: Exponent, l: Exponent) -> Exponent:
    return tuple(a + b for a, b in zip(k, l))


def _exp_neg(k: Exponent) -> Exponent:
    return tuple(-a for a in k)


class TorusElement:
    """A finite R-linear combination of Weyl monomials."""

    __slots__ = ("form", "terms")

    def __init__(self, form: SkewForm, terms: dict[Exponent, Coeff] | None = None):
        self.form = form
        self.terms: dict[Exponent, Coeff] = {}
        if terms:
            for k, c in terms.items():
                if not c.is_zero():
                    self.terms[k] = c

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(form: SkewForm) -> "TorusElement":
        return TorusElement(form)

    @staticmethod
    def monomial(form: SkewForm, k: Exponent, coeff: Coeff = Coeff.one()) -> "TorusElement":
        return TorusElement(form, {tuple(k): coeff})

    @staticmethod
    def scalar(form: SkewForm, coeff: Coeff) -> "TorusElement":
        return TorusElement(form, {(0,) * form.rank: coeff})

    @staticmethod
    def one(form: SkewForm) -> "TorusElement":
        return TorusElement.scalar(form, Coeff.one())

    @staticmethod
    def generator(form: SkewForm, index: int, power: int = 1) -> "TorusElement":
        k = [0] * form.rank
        k[index] = power
        return TorusElement.monomial(form, tuple(k))

    def copy(self) -> "TorusElement":
        return TorusElement(self.form, dict(self.terms))

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "TorusElement") -> "TorusElement":
        d = dict(self.terms)
        for k, c in other.terms.items():
            d[k] = d.get(k, Coeff.zero()) + c
        return TorusElement(self.form, d)

    def __neg__(self) -> "TorusElement":
        return TorusElement(self.form, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TorusElement") -> "TorusElement":
        return self + (-other)

    def __mul__(self, other: "TorusElement") -> "TorusElement":
        form = self.form
        d: dict[Exponent, Coeff] = {}
        for k, ck in self.terms.items():
            for l, cl in other.terms.items():
                m = _exp_add(k, l)
                c = (ck * cl).shift(form.pairing(k, l))
                d[m] = d.get(m, Coeff.zero()) + c
        return TorusElement(form, d)

    def scale(self, c: Coeff) -> "TorusElement":
        return TorusElement(self.form, {k: ck * c for k, ck in self.terms.items()})

    def __pow__(self, n: int) -> "TorusElement":
        if n < 0:
            return self.inverse() ** (-n)
        out = TorusElement.one(self.form)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "TorusElement":
        """Inverse of a unit monomial c x^k: c^{-1} x^{-k}."""
        if len(self.terms) != 1:
            raise ZeroDivisionError("not a unit monomial")
        ((k, c),) = self.terms.items()
        return TorusElement.monomial(self.form, _exp_neg(k), c.inverse())

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.form == other.form and (self - other).is_zero()

    def __hash__(self):
        raise TypeError("TorusElement is mutable-ish; not hashable")

    # -- structure ---------------------------------------------------------

    def frobenius(self, N: int, repair_coeff=None) -> "TorusElement":
        """Monomial-wise N-th Frobenius power: c x^k -> c' x^{Nk}.

        ``repair_coeff`` maps each coefficient; the default substitutes
        q^{1/2} -> (q^{1/2})^{N^2}, the pairing epsilon <-> zeta^{N^2}.
        """
        if repair_coeff is None:
            repair_coeff = lambda c: c.stretch(N * N)
        return TorusElement(
            self.form,
            {tuple(N * e for e in k): repair_coeff(c) for k, c in self.terms.items()},
        )

    def support(self) -> list[Exponent]:
        return sorted(self.terms)

    def at_q_one(self) -> dict[Exponent, Gaussian]:
        out = {}
        for k, c in self.terms.items():
            g = c.at_q_one()
            if g != (0, 0):
                out[k] = g
        return out

    def at_numeric(self, s: complex, values: list[complex]) -> complex:
        """Numeric evaluation with q^{1/2} = s and x_i = values[i].

        Valid evaluation of Weyl monomials requires the values to commute,
        i.e. this is the classical (q = 1) evaluation unless the q-powers
        are wanted formally; it is used with s = 1 for classical checks.
        """
        total = 0j
        for k, c in self.terms.items():
            v = c.at_numeric(s)
            for i, e in enumerate(k):
                if e:
                    v *= values[i] ** e
            total += v
        return total

    def specialize(self, spec: CyclotomicSpec, *, s_exp: int | None = None, i_image=None):
        """Map to {exponent: cyclotomic element} at the given root of unity."""
        R = spec.ring
        out = {}
        for k, c in self.terms.items():
            v = spec.coeff(c, s_exp=s_exp, i_image=i_image)
            if not R.is_zero(v):
                out[k] = v
        return out

    def __repr__(self):
        if not self.terms:
            return "TorusElement(0)"
        parts = [f"{c!r}*x^{list(k)}" for k, c in sorted(self.terms.items())]
        return "TorusElement(" + " + ".join(parts) + ")"


class SpecTorusElement:
    """A torus element with coefficients specialized in a cyclotomic ring.

    ``s_exp`` is the exponent e with q^{1/2} = y^e for the primitive root y
    of ``spec.ring``; multiplication of Weyl monomials inserts
    y^{e <k, l>}.  ``i_image`` is the image of the Gaussian unit used when
    converting universal coefficients (default y^{M/4}).
    """

    __slots__ = ("form", "spec", "s_exp", "i_image", "terms")

    def __init__(self, form: SkewForm, spec: CyclotomicSpec, s_exp: int,
                 i_image=None, terms=None):
        self.form = form
        self.spec = spec
        self.s_exp = s_exp
        self.i_image = spec.ring.i_unit() if i_image is None else i_image
        self.terms = {}
        if terms:
            R = spec.ring
            for k, c in terms.items():
                if not R.is_zero(c):
                    self.terms[k] = c

    def _like(self, terms) -> "SpecTorusElement":
        return SpecTorusElement(self.form, self.spec, self.s_exp, self.i_image, terms)

    @staticmethod
    def from_universal(x: TorusElement, spec: CyclotomicSpec, *, s_exp=None,
                       i_image=None) -> "SpecTorusElement":
        se = spec.s_exp if s_exp is None else s_exp
        out = SpecTorusElement(x.form, spec, se, i_image)
        out.terms = x.specialize(spec, s_exp=se, i_image=out.i_image)
        return out

    def monomial(self, k: Exponent, coeff=None) -> "SpecTorusElement":
        return self._like({tuple(k): self.spec.ring.one() if coeff is None else coeff})

    def zero(self) -> "SpecTorusElement":
        return self._like({})

    def one(self) -> "SpecTorusElement":
        return self.monomial((0,) * self.form.rank)

    def __add__(self, other: "SpecTorusElement") -> "SpecTorusElement":
        R = self.spec.ring
        d = dict(self.terms)
        for k, c in other.terms.items():
            d[k] = R.add(d.get(k, R.zero()), c)
        return self._like(d)

    def __neg__(self) -> "SpecTorusElement":
        R = self.spec.ring
        return self._like({k: R.neg(c) for k, c in self.terms.items()})

    def __sub__(self, other: "SpecTorusElement") -> "SpecTorusElement":
        return self + (-other)

    def __mul__(self, other: "SpecTorusElement") -> "SpecTorusElement":
        R = self.spec.ring
        d: dict = {}
        for k, ck in self.terms.items():
            for l, cl in other.terms.items():
                m = _exp_add(k, l)
                c = R.mul(R.mul(ck, cl), R.root_power(self.s_exp * self.form.pairing(k, l)))
                d[m] = R.add(d.get(m, R.zero()), c)
        return self._like(d)

    def __pow__(self, n: int) -> "SpecTorusElement":
        if n < 0:
            raise ValueError("negative powers not supported on specialized elements")
        out = self.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c) -> "SpecTorusElement":
        R = self.spec.ring
        return self._like({k: R.mul(ck, c) for k, ck in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpecTorusElement):
            return NotImplemented
        return self.form == other.form and (self - other).is_zero()

    def __hash__(self):
        raise TypeError("SpecTorusElement is not hashable")

    def support(self):
        return sorted(self.terms)

    def numeric(self, values: list[complex]) -> complex:
        total = 0j
        for k, c in self.terms.items():
            v = self.spec.ring.numeric(c)
            for i, e in enumerate(k):
                if e:
                    v *= values[i] ** e
            total += v
        return total

    def __repr__(self):
        if not self.terms:
            return "SpecTorusElement(0)"
        parts = [f"{list(c)}*x^{list(k)}" for k, c in sorted(self.terms.items())]
        return "SpecTorusElement(" + " + ".join(parts) + ")"


def weyl_ordered_product(form: SkewForm, factors: list[tuple[Coeff, Exponent]]) -> TorusElement:
    """The Weyl ordering of a product of monomials: coefficients multiply,
    exponents add, and no q-powers are introduced."""
    c = Coeff.one()
    k = (0,) * form.rank
    for cf, kf in factors:
        c = c * cf
        k = _exp_add(k, tuple(kf))
    return TorusElement.monomial(form, k, c)


def zprime_monomial(form: SkewForm, tet: int) -> TorusElement:
    """The monomial presenting z'_j: the unique m with z_j m z''_j = i q^{3/2},
    namely i q x^{-e_{2j} - e_{2j+1}}."""
    k = [0] * form.rank
    k[2 * tet] = -1
    k[2 * tet + 1] = -1
    return TorusElement.monomial(form, tuple(k), Coeff.i() * Coeff.q_power(1))
