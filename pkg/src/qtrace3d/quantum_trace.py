"""The quantum trace of a closed multicurve as a state sum.

Every closed curve is a cyclic transit sequence (see :mod:`.lantern`);
junction i of a curve is the A-circle crossing between transits i-1 and i,
and it carries a +- state and a height equal to its index (curves of a
multicurve are stacked in order, earlier curves lower).  For each state
assignment, every lantern contributes the skein value of its stack of
stated arcs, computed by peeling the lowest arc at a time:

* a twisted standard-arc endpoint is moved one puncture step toward its
  home slot using the height-exchange relations, whose coefficients depend
  on the state sums (gradings) of the three boundary edges involved;
* an untwisted bottom arc is peeled off: a standard arc with equal states
  s contributes the Weyl generator of its dual edge to the power -s, a
  corner arc a unit coefficient, a trivial returning arc a power of
  q^{1/2}; the exchange of the peeled arc past the rest contributes
  q^{b/2} with b the cyclic skew form of the edge gradings.

Values from different lanterns commute and multiply to the term of the
state sum; the total is an element of the quantum torus with one
(z_j, z''_j) pair of generators per tetrahedron.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from itertools import product

from . import conventions
from .coefficients import Coeff
from .lantern import (
    AlphaArc,
    BetaArc,
    CurveError,
    GammaArc,
    TransitSequence,
    TrivialLoop,
    check_closed,
    circle_edges,
    rotate_edge,
)
from .quantum_torus import SkewForm, TorusElement, zprime_monomial
from .triangulation import Triangulation

LOOP_VALUE = Coeff.make({4: (-1, 0), -4: (-1, 0)})  # -q^2 - q^{-2}

# trivial-arc values keyed by the states in positive-boundary order, for
# heights increasing / decreasing along that order
ALPHA_INCREASING = {(1, -1): Coeff.q_half(-1), (-1, 1): -Coeff.q_half(-5)}
ALPHA_DECREASING = {(1, -1): Coeff.q_half(1), (-1, 1): -Coeff.q_half(5)}


@dataclass(frozen=True)
class _Placed:
    """One stated arc inside a lantern, at its current (possibly partly
    untwisted) endpoint positions."""

    kind: str  # "gamma" | "beta" | "alpha"
    tet: int
    c_in: int
    e_in: frozenset
    s_in: int
    h_in: int
    rem_in: int
    c_out: int
    e_out: frozenset
    s_out: int
    h_out: int
    rem_out: int
    shape_type: int = -1
    direction: int = 0

    def endpoints(self):
        return ((self.c_in, self.e_in, self.s_in), (self.c_out, self.e_out, self.s_out))


def _gradings(arcs) -> dict:
    d: dict = {}
    for a in arcs:
        for c, e, s in a.endpoints():
            d[(c, e)] = d.get((c, e), 0) + s
    return d


def _cyclic_b(u, v) -> int:
    """b(u, v) on Z^3 with b(e_i, e_{i+1}) = 1 cyclically."""
    return (
        u[0] * v[1] - u[1] * v[0]
        + u[1] * v[2] - u[2] * v[1]
        + u[2] * v[0] - u[0] * v[2]
    )


def _exchange_exponent(rest, bottom) -> int:
    """Sum over boundary circles of b(gradings(rest), gradings(bottom))."""
    d_rest, d_bot = _gradings(rest), _gradings(bottom)
    circles = {c for (c, _e) in list(d_rest) + list(d_bot)}
    total = 0
    for c in circles:
        edges = circle_edges(c)
        u = [d_rest.get((c, e), 0) for e in edges]
        v = [d_bot.get((c, e), 0) for e in edges]
        total += _cyclic_b(u, v)
    return total


def _twist_branches(arcs, idx: int, entry: bool):
    """Expand one twist step of arcs[idx]; yields (coeff, new_arcs)."""
    a = arcs[idx]
    if entry:
        circle, cur, rem, state = a.c_in, a.e_in, a.rem_in, a.s_in
    else:
        circle, cur, rem, state = a.c_out, a.e_out, a.rem_out, a.s_out
    step = -1 if rem > 0 else 1
    new = rotate_edge(circle, cur, step)
    before, after = (cur, new) if step == 1 else (new, cur)
    if conventions.TWIST_UP_IS_CCW:
        top, bottom_e = after, before
    else:
        top, bottom_e = before, after
    d = _gradings(arcs)
    d_top = d.get((circle, top), 0)
    d_bot = d.get((circle, bottom_e), 0)
    (third,) = [e for e in circle_edges(circle) if e not in (top, bottom_e)]
    d_third = d.get((circle, third), 0)
    if new == top:  # endpoint moves up
        if state == 1:
            branches = [(Coeff.i() * Coeff.q_half(d_top - d_bot + 3), -1)]
        else:
            branches = [
                (Coeff.i() * Coeff.q_half(d_bot - d_top + 3), 1),
                (Coeff.q_half(2 * d_third - d_top - d_bot + 1), -1),
            ]
    else:  # endpoint moves down
        if state == -1:
            branches = [(-Coeff.i() * Coeff.q_half(d_bot - d_top - 3), 1)]
        else:
            branches = [
                (Coeff.q_half(2 * d_third - d_top - d_bot - 1), 1),
                (-Coeff.i() * Coeff.q_half(d_top - d_bot - 3), -1),
            ]
    for coeff, new_state in branches:
        if entry:
            b = dataclasses.replace(a, e_in=new, rem_in=rem + step, s_in=new_state)
        else:
            b = dataclasses.replace(a, e_out=new, rem_out=rem + step, s_out=new_state)
        yield coeff, arcs[:idx] + (b,) + arcs[idx + 1 :]


def _peel_value(form: SkewForm, a: _Placed) -> TorusElement:
    if a.kind == "gamma":
        if a.s_in != a.s_out:
            return TorusElement.zero(form)
        s = a.s_in
        if a.shape_type == 1:
            return zprime_monomial(form, a.tet) ** (-s)
        index = 2 * a.tet + (1 if a.shape_type == 2 else 0)
        return TorusElement.generator(form, index, -s)
    if a.kind == "beta":
        if a.direction == 1:
            key = (a.s_in, a.s_out)
        else:
            key = (a.s_out, a.s_in)
        if key == (1, 1):
            c = Coeff.i() * Coeff.q_half(2)
        elif key == (-1, -1):
            c = Coeff.i(3) * Coeff.q_half(-2)
        elif key == conventions.BAD_CORNER:
            return TorusElement.zero(form)
        else:
            c = Coeff.one()
        return TorusElement.scalar(form, c)
    # alpha: keyed by states in positive-boundary order with height trend
    if a.s_in == a.s_out:
        return TorusElement.zero(form)
    if a.h_in == a.h_out:
        raise CurveError("trivial arc endpoints at equal heights")
    if conventions.ALPHA_ENTRY_FIRST:
        key, increasing = (a.s_in, a.s_out), a.h_in < a.h_out
    else:
        key, increasing = (a.s_out, a.s_in), a.h_out < a.h_in
    table = ALPHA_INCREASING if increasing else ALPHA_DECREASING
    return TorusElement.scalar(form, table[key])


def _eval_lantern(form: SkewForm, arcs: tuple) -> TorusElement:
    if not arcs:
        return TorusElement.one(form)
    bottom = arcs[0]
    if bottom.kind == "gamma" and bottom.rem_in != 0:
        out = TorusElement.zero(form)
        for coeff, new_arcs in _twist_branches(arcs, 0, entry=True):
            out = out + _eval_lantern(form, new_arcs).scale(coeff)
        return out
    if bottom.kind == "gamma" and bottom.rem_out != 0:
        out = TorusElement.zero(form)
        for coeff, new_arcs in _twist_branches(arcs, 0, entry=False):
            out = out + _eval_lantern(form, new_arcs).scale(coeff)
        return out
    value = _peel_value(form, bottom)
    if value.is_zero():
        return value
    rest = arcs[1:]
    exp = _exchange_exponent(rest, (bottom,))
    return _eval_lantern(form, rest).scale(Coeff.q_half(exp)) * value


def _place(t, s_in, s_out, h_in, h_out) -> _Placed:
    if isinstance(t, GammaArc):
        loc_in, loc_out = t.start_loc(), t.end_loc()
        return _Placed(
            "gamma", t.lantern,
            t.circle_in, loc_in[2], s_in, h_in, t.twist_in,
            t.circle_out, loc_out[2], s_out, h_out, t.twist_out,
            shape_type=t.shape_type,
        )
    if isinstance(t, BetaArc):
        return _Placed(
            "beta", t.lantern,
            t.circle, t.edge_in, s_in, h_in, 0,
            t.circle, t.edge_out, s_out, h_out, 0,
            direction=t.direction,
        )
    if isinstance(t, AlphaArc):
        return _Placed(
            "alpha", t.lantern,
            t.circle, t.edge, s_in, h_in, 0,
            t.circle, t.edge, s_out, h_out, 0,
        )
    raise TypeError(f"unsupported transit {t!r}")


def quantum_trace(
    tri: Triangulation, curves: list[TransitSequence], *, prune: bool = True
) -> TorusElement:
    """Quantum trace of a multicurve in the quantum torus of `tri`."""
    form = SkewForm.standard_blocks(tri.num_tetrahedra)
    scalar = Coeff.one()
    real = []
    for curve in curves:
        if len(curve) == 1 and isinstance(curve[0], TrivialLoop):
            scalar = scalar * LOOP_VALUE
            continue
        check_closed(tri, curve)
        real.append(curve)
    if not real:
        return TorusElement.scalar(form, scalar)

    # junction bookkeeping: (curve, i) between transits i-1 and i
    junctions = [(c, i) for c, curve in enumerate(real) for i in range(len(curve))]
    offsets = []
    h = 0
    for curve in real:
        offsets.append(h)
        h += len(curve)
    height = {(c, i): offsets[c] + i for (c, i) in junctions}

    # prune: states at the two ends of an untwisted standard arc must agree
    parent = {j: j for j in junctions}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    if prune:
        for c, curve in enumerate(real):
            n = len(curve)
            for i, t in enumerate(curve):
                if isinstance(t, GammaArc) and t.twist_in == 0 and t.twist_out == 0:
                    a, b = find((c, i)), find((c, (i + 1) % n))
                    if a != b:
                        parent[a] = b
    classes = sorted({find(j) for j in junctions})

    total = TorusElement.zero(form)
    for signs in product((1, -1), repeat=len(classes)):
        state = {j: signs[classes.index(find(j))] for j in junctions}
        per_lantern: dict[int, list] = {}
        for c, curve in enumerate(real):
            n = len(curve)
            for i, t in enumerate(curve):
                j_in, j_out = (c, i), (c, (i + 1) % n)
                placed = _place(
                    t, state[j_in], state[j_out], height[j_in], height[j_out]
                )
                per_lantern.setdefault(placed.tet, []).append(placed)
        term = TorusElement.one(form)
        for tet in sorted(per_lantern):
            term = term * _eval_lantern(form, tuple(per_lantern[tet]))
            if term.is_zero():
                break
        total = total + term
    return total.scale(scalar)
