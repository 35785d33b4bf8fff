"""Classical (q = 1) trace of a closed curve as a 2x2 matrix product.

At q = 1 the skein value of a closed transit sequence collapses to the
trace of an ordered product of SL_2 matrices, one per transit, with matrix
indices running over the +- junction states (index 0 is +, index 1 is -):

* standard arc: diag(v^{-1}, v) with v the square-root shape variable of
  the dual tetrahedron edge, conjugated by the q = 1 twist chains at
  either end;
* corner arc: [[i, 0], [1, -i]] (counterclockwise) in positional reading;
* trivial returning arc: [[0, 1], [-1, 0]].

The product is computed over the commutative Laurent ring in the 2N
variables z_j, z''_j (with z'_j = i z_j^{-1} z''_j^{-1}), so the same
computation serves both as the exact symbolic oracle for the q -> 1
specialization and, after numeric evaluation at a lifted solution of the
gluing equations, as the classical trace.
"""

from __future__ import annotations

from . import conventions
from .coefficients import Coeff
from .lantern import AlphaArc, BetaArc, GammaArc, TransitSequence, TrivialLoop
from .quantum_torus import SkewForm, TorusElement

Mat = list  # 2x2 nested lists of TorusElement, index 0 = state +, 1 = state -


def commutative_form(num_tets: int) -> SkewForm:
    """The zero skew form: the classical limit of the quantum torus."""
    r = 2 * num_tets
    return SkewForm(tuple(tuple(0 for _ in range(r)) for _ in range(r)))


def _mat(form, rows) -> Mat:
    def lift(entry):
        if isinstance(entry, TorusElement):
            return entry
        return TorusElement.scalar(form, entry)

    return [[lift(e) for e in row] for row in rows]


def mat_mul(a: Mat, b: Mat) -> Mat:
    return [
        [a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)]
        for i in range(2)
    ]


def mat_trace(a: Mat) -> TorusElement:
    return a[0][0] + a[1][1]


def twist_step_matrix(form: SkewForm, ccw: bool) -> Mat:
    """q = 1 chain matrix for one endpoint step: [moved, s] = sum_t C[s][t]
    [home, t] with the step moving the endpoint one puncture ccw or cw."""
    up = _mat(form, [[Coeff.zero(), Coeff.i()], [Coeff.i(), Coeff.one()]])
    down = _mat(form, [[Coeff.one(), Coeff.i(-1)], [Coeff.i(-1), Coeff.zero()]])
    return up if ccw == conventions.TWIST_UP_IS_CCW else down


def _chain(form: SkewForm, twist: int) -> Mat:
    """Transport matrix from a twisted endpoint position back to home."""
    c = _mat(form, [[Coeff.one(), Coeff.zero()], [Coeff.zero(), Coeff.one()]])
    step = twist_step_matrix(form, ccw=(twist < 0))
    for _ in range(abs(twist)):
        c = mat_mul(c, step)
    return c


def shape_variable(form: SkewForm, tet: int, shape_type: int, power: int) -> TorusElement:
    """(z, z' or z'')^power of tetrahedron `tet` in the commutative ring."""
    k = [0] * form.rank
    if shape_type == 0:
        k[2 * tet] = power
        return TorusElement.monomial(form, tuple(k))
    if shape_type == 2:
        k[2 * tet + 1] = power
        return TorusElement.monomial(form, tuple(k))
    # z' = i z^{-1} z''^{-1} at q = 1
    k[2 * tet] = -power
    k[2 * tet + 1] = -power
    return TorusElement.monomial(form, tuple(k), Coeff.i() ** power)


def beta_matrix(form: SkewForm, direction: int) -> Mat:
    i1, iz = Coeff.i(), Coeff.i(-1)
    one, zero = Coeff.one(), Coeff.zero()
    # positional corner values V(state at ccw-before, state at ccw-after)
    bad = conventions.BAD_CORNER
    good = (-bad[0], -bad[1])
    table = {(1, 1): i1, (-1, -1): iz, bad: zero, good: one}
    sgn = (1, -1)
    if direction == 1:  # entry endpoint sits at the ccw-before edge
        rows = [[table[(s, t)] for t in sgn] for s in sgn]
    else:
        rows = [[table[(t, s)] for t in sgn] for s in sgn]
    return _mat(form, rows)


def alpha_matrix(form: SkewForm) -> Mat:
    one, zero = Coeff.one(), Coeff.zero()
    return _mat(form, [[zero, one], [-one, zero]])


def transit_matrix(form: SkewForm, t) -> Mat:
    if isinstance(t, GammaArc):
        d = _mat(
            form,
            [
                [shape_variable(form, t.lantern, t.shape_type, -1), Coeff.zero()],
                [Coeff.zero(), shape_variable(form, t.lantern, t.shape_type, 1)],
            ],
        )
        c_in = _chain(form, t.twist_in)
        c_out = _chain(form, t.twist_out)
        # V = C_in D C_out^T
        return mat_mul(mat_mul(c_in, d), [[c_out[j][i] for j in range(2)] for i in range(2)])
    if isinstance(t, BetaArc):
        return beta_matrix(form, t.direction)
    if isinstance(t, AlphaArc):
        return alpha_matrix(form)
    raise TypeError(f"unsupported transit {t!r}")


def classical_trace_element(num_tets: int, transits: TransitSequence) -> TorusElement:
    """Exact symbolic q = 1 trace, a commutative Laurent polynomial."""
    form = commutative_form(num_tets)
    if len(transits) == 1 and isinstance(transits[0], TrivialLoop):
        return TorusElement.scalar(form, Coeff.integer(-2))
    acc = _mat(form, [[Coeff.one(), Coeff.zero()], [Coeff.zero(), Coeff.one()]])
    for t in transits:
        acc = mat_mul(acc, transit_matrix(form, t))
    return mat_trace(acc)


def classical_trace(num_tets: int, transits: TransitSequence, lifts) -> complex:
    """Numeric classical trace at square-root shape lifts.

    ``lifts`` is a sequence of (z_j, z''_j) pairs, one per tetrahedron.
    """
    values = [v for pair in lifts for v in pair]
    return classical_trace_element(num_tets, transits).at_numeric(1.0, values)
