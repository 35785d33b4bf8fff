"""The lantern complex of an ideal triangulation, and curves on it.

Each tetrahedron j contributes a lantern L_j (a 4-holed sphere); boundary
circle f of L_j lies on face f and is glued to the matching circle of the
neighboring lantern.  Each circle carries a *boundary triangle*: three
punctures indexed by the vertices of the face and three boundary edges
indexed by vertex pairs, in the cyclic (counterclockwise) order induced by
the orientation.  The standard arc joining circles f and g inside L_j is
dual to the tetrahedron edge {0,1,2,3} - {f,g}; its endpoint slot on either
circle is the boundary edge with that vertex-pair label.

A closed curve is a cyclic sequence of *transits*.  Consecutive transits
meet at a *junction*: a transversal crossing of the A-circle between their
lanterns, which acquires a +- state in the state sum.  Supported (taut)
transits:

* ``GammaArc``    - a standard arc, with integer boundary twists at either
                    end (each twist moves an endpoint one puncture step
                    around its boundary circle);
* ``BetaArc``     - a returning corner arc passing one puncture;
* ``AlphaArc``    - a returning trivial arc inside one boundary edge;
* ``TrivialLoop`` - a contractible loop inside one lantern (no junctions).

Curves may be given as letter words on the smooth 1-skeleton and resolved
into transit sequences; see :func:`resolve_word`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .triangulation import SHAPE_TYPE, Triangulation

# counterclockwise vertex cycle of face f: (f, a, b, c) is an even permutation
FACE_CYCLE = {0: (1, 2, 3), 1: (0, 3, 2), 2: (0, 1, 3), 3: (0, 2, 1)}

Location = tuple[int, int, frozenset]  # (lantern, circle, boundary edge)


def circle_edges(f: int) -> list[frozenset]:
    """Boundary edges of the triangle on circle f, in ccw order.

    Edge i runs from puncture cyc[i] to puncture cyc[i+1].

    >>> circle_edges(0) == [frozenset({1, 2}), frozenset({2, 3}), frozenset({1, 3})]
    True
    """
    a, b, c = FACE_CYCLE[f]
    return [frozenset({a, b}), frozenset({b, c}), frozenset({c, a})]


def rotate_edge(f: int, edge: frozenset, steps: int) -> frozenset:
    """Rotate a boundary edge of circle f by ccw puncture steps."""
    edges = circle_edges(f)
    return edges[(edges.index(edge) + steps) % 3]


def edge_slot(f: int, edge: frozenset) -> int:
    return circle_edges(f).index(edge)


def step_distance(f: int, edge_from: frozenset, edge_to: frozenset) -> int:
    """Signed ccw steps (in {-1, 0, 1}) from one edge slot to another."""
    d = (edge_slot(f, edge_to) - edge_slot(f, edge_from)) % 3
    return d if d <= 1 else -1


def corner_punctures(f: int, edge_from: frozenset, edge_to: frozenset) -> int:
    """The puncture crossed when moving between two adjacent edges."""
    common = edge_from & edge_to
    if len(common) != 1:
        raise ValueError("edges are not adjacent")
    return next(iter(common))


@dataclass(frozen=True)
class GammaArc:
    lantern: int
    circle_in: int
    circle_out: int
    twist_in: int = 0
    twist_out: int = 0

    def __post_init__(self):
        if self.circle_in == self.circle_out:
            raise ValueError("standard arc needs distinct boundary circles")

    @property
    def dual_pair(self) -> frozenset:
        """Tetrahedron edge that this standard arc is dual to."""
        return frozenset(range(4)) - {self.circle_in, self.circle_out}

    @property
    def shape_type(self) -> int:
        return SHAPE_TYPE[self.dual_pair]

    def start_loc(self) -> Location:
        e = rotate_edge(self.circle_in, self.dual_pair, self.twist_in)
        return (self.lantern, self.circle_in, e)

    def end_loc(self) -> Location:
        e = rotate_edge(self.circle_out, self.dual_pair, self.twist_out)
        return (self.lantern, self.circle_out, e)

    def tagged(self) -> dict:
        return {
            "kind": "gamma",
            "lantern": self.lantern,
            "circles": [self.circle_in, self.circle_out],
            "twists": [self.twist_in, self.twist_out],
        }


@dataclass(frozen=True)
class BetaArc:
    """Corner arc passing one puncture.  ``direction`` +1 means the arc runs
    counterclockwise (entry edge ccw-precedes the exit edge)."""

    lantern: int
    circle: int
    edge_in: frozenset
    direction: int = 1

    def __post_init__(self):
        if self.direction not in (1, -1):
            raise ValueError("direction must be +-1")

    @property
    def edge_out(self) -> frozenset:
        return rotate_edge(self.circle, self.edge_in, self.direction)

    @property
    def puncture(self) -> int:
        return corner_punctures(self.circle, self.edge_in, self.edge_out)

    def start_loc(self) -> Location:
        return (self.lantern, self.circle, self.edge_in)

    def end_loc(self) -> Location:
        return (self.lantern, self.circle, self.edge_out)

    def tagged(self) -> dict:
        return {
            "kind": "beta",
            "lantern": self.lantern,
            "circle": self.circle,
            "edge": sorted(self.edge_in),
            "direction": self.direction,
        }


@dataclass(frozen=True)
class AlphaArc:
    """Trivial returning arc with both endpoints on one boundary edge."""

    lantern: int
    circle: int
    edge: frozenset

    def start_loc(self) -> Location:
        return (self.lantern, self.circle, self.edge)

    def end_loc(self) -> Location:
        return (self.lantern, self.circle, self.edge)

    def tagged(self) -> dict:
        return {
            "kind": "alpha",
            "lantern": self.lantern,
            "circle": self.circle,
            "edge": sorted(self.edge),
        }


@dataclass(frozen=True)
class TrivialLoop:
    """Contractible loop inside one lantern; a curve of its own."""

    lantern: int

    def tagged(self) -> dict:
        return {"kind": "loop", "lantern": self.lantern}


Transit = GammaArc | BetaArc | AlphaArc
TransitSequence = list


class CurveError(ValueError):
    pass


def glued_location(tri: Triangulation, loc: Location) -> Location:
    """The same A-circle point seen from the neighboring lantern."""
    j, f, edge = loc
    sigma = tri.gluings[j][f]
    return (tri.neighbors[j][f], sigma[f], frozenset(sigma[v] for v in edge))


def check_closed(tri: Triangulation, transits: TransitSequence) -> None:
    """Validate junction matching: each transit ends where the next one
    starts, as seen across the A-circle gluing."""
    if len(transits) == 1 and isinstance(transits[0], TrivialLoop):
        return
    if not transits:
        raise CurveError("empty transit sequence")
    for i, t in enumerate(transits):
        if isinstance(t, TrivialLoop):
            raise CurveError("trivial loop cannot be part of a longer curve")
        nxt = transits[(i + 1) % len(transits)]
        expect = glued_location(tri, t.end_loc())
        if expect != nxt.start_loc():
            raise CurveError(
                f"transits {i} -> {(i + 1) % len(transits)} do not meet: "
                f"{t.end_loc()} glues to {expect}, next starts {nxt.start_loc()}"
            )


# ---------------------------------------------------------------------------
# Curve words on the smooth 1-skeleton
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Anchor:
    """Starting 0-cell of a curve word: a standard-arc endpoint slot."""

    lantern: int
    circle: int
    slot: int

    def location(self) -> Location:
        return (self.lantern, self.circle, circle_edges(self.circle)[self.slot])

    @classmethod
    def parse(cls, text: str) -> "Anchor":
        """Parse ``L<j>:C<f>:S<slot>:<type>`` (the type tag is informative).

        >>> Anchor.parse("L0:C2:S1:g")
        Anchor(lantern=0, circle=2, slot=1)
        """
        parts = text.split(":")
        if len(parts) not in (3, 4) or not (
            parts[0][:1] == "L" and parts[1][:1] == "C" and parts[2][:1] == "S"
        ):
            raise CurveError(f"bad anchor {text!r}, expected L<j>:C<f>:S<slot>[:<type>]")
        try:
            j, f, s = int(parts[0][1:]), int(parts[1][1:]), int(parts[2][1:])
        except ValueError:
            raise CurveError(f"bad anchor {text!r}: indices must be integers") from None
        if not (0 <= f < 4 and 0 <= s < 3):
            raise CurveError(f"bad anchor {text!r}: circle in 0..3, slot in 0..2")
        return cls(j, f, s)


def resolve_word(tri: Triangulation, anchor: Anchor, word: str) -> TransitSequence:
    """Resolve a cyclic letter word into a closed transit sequence.

    Letters: ``a``/``A`` cross the current A-circle, ``b``/``B`` move one
    puncture step around it (ccw / cw as seen from the current lantern),
    ``g``/``G`` traverse the standard arc at the current slot.  Junctions of
    the resulting sequence are exactly the crossings; the b-moves adjacent
    to a ``g`` become boundary twists of that standard arc, and crossing
    segments without a ``g`` become returning arcs (a trivial arc for an
    immediate re-crossing, a corner arc when one b-move lies between).

    Two ``g`` letters with no crossing between them would re-traverse the
    arc just travelled (the only incident gamma edge is the reverse one),
    so they are rejected, as are returning segments passing more than one
    puncture (non-taut within the supported curve class).
    """
    if anchor.lantern >= tri.num_tetrahedra:
        raise CurveError("anchor lantern out of range")
    letters = [c for c in word if not c.isspace()]
    if not letters:
        raise CurveError("empty word")
    bad = [c for c in letters if c not in "aAbBgG"]
    if bad:
        raise CurveError(f"unknown letter {bad[0]!r}")
    if "a" not in word and "A" not in word:
        raise CurveError(
            "unsupported letter pattern: word never crosses an A-circle"
        )

    loc = anchor.location()
    # each crossing segment collects net b-movement and at most one gamma
    segments: list[dict] = []
    current = {"pre": 0, "gamma": None, "post": 0, "start": None}
    for pos, letter in enumerate(letters):
        if letter in "bB":
            step = 1 if letter == "b" else -1
            j, f, e = loc
            loc = (j, f, rotate_edge(f, e, step))
            key = "post" if current["gamma"] is not None else "pre"
            current[key] += step
        elif letter in "gG":
            if current["gamma"] is not None:
                raise CurveError(
                    f"letter {pos}: only the reverse gamma edge is incident here"
                )
            j, f, e = loc
            if f in e:
                raise CurveError(f"letter {pos}: no standard arc at this slot")
            g = next(iter(frozenset(range(4)) - e - {f}))
            current["gamma"] = (j, f, g, e)
            loc = (j, g, e)
        else:  # crossing
            current["end"] = loc
            segments.append(current)
            loc = glued_location(tri, loc)
            current = {"pre": 0, "gamma": None, "post": 0, "start": loc}
    if loc != anchor.location():
        raise CurveError("word is not closed (walk does not return to anchor)")
    # the word is cyclic: letters before the first crossing (collected in
    # segments[0]) continue the letters after the last one (in `current`)
    head = segments.pop(0)
    if current["gamma"] is not None and head["gamma"] is not None:
        raise CurveError("unsupported letter pattern: two gamma steps between crossings")
    if current["gamma"] is not None:
        current["post"] += head["pre"]  # head carries no gamma
    elif head["gamma"] is not None:
        current["gamma"] = head["gamma"]
        current["pre"] += head["pre"]
        current["post"] = head["post"]
    else:
        current["pre"] += head["pre"]
    current["end"] = head["end"]
    segments.append(current)

    transits: TransitSequence = []
    for seg in segments:
        j, f, e = seg["start"]
        if seg["gamma"] is not None:
            gj, gf, gg, ge = seg["gamma"]
            if gj != j:
                raise CurveError("internal walk error")
            transits.append(
                GammaArc(j, gf, gg, twist_in=-seg["pre"], twist_out=seg["post"])
            )
        else:
            moves = seg["pre"] + seg["post"]
            if moves == 0:
                transits.append(AlphaArc(j, f, e))
            elif moves in (1, -1):
                transits.append(BetaArc(j, f, e, direction=moves))
            else:
                raise CurveError(
                    "unsupported letter pattern: returning arc passing "
                    f"{abs(moves)} punctures"
                )
    check_closed(tri, transits)
    return transits


# ---------------------------------------------------------------------------
# Peripheral curves from cusp walks
# ---------------------------------------------------------------------------
#
# A peripheral curve is described by a closed walk in the dual graph of the
# cusp triangulation: a cyclic list of steps (tet, vertex, face_in,
# face_out), entering the cusp triangle at vertex `vertex` of tetrahedron
# `tet` through the side on face `face_in` and leaving through `face_out`.
# Each step becomes one standard-arc transit of the lantern of that
# tetrahedron, running parallel to the arc dual to the tetrahedron edge
# {vertex, w} where w is the remaining vertex.  The crossing between
# consecutive steps is placed at the endpoint slot of the *exiting* arc, so
# exit twists vanish and entry twists take values in {-1, 0, 1}.


@dataclass(frozen=True)
class CuspStep:
    tet: int
    vertex: int
    face_in: int
    face_out: int

    def __post_init__(self):
        if len({self.vertex, self.face_in, self.face_out}) != 3:
            raise CurveError("cusp step needs distinct vertex and faces")

    @property
    def dual_pair(self) -> frozenset:
        return frozenset(range(4)) - {self.face_in, self.face_out}


def cusp_walk_transits(tri: Triangulation, steps: list[CuspStep]) -> TransitSequence:
    """Convert a closed dual walk on a cusp into a transit sequence."""
    n = len(steps)
    for i, s in enumerate(steps):
        nxt = steps[(i + 1) % n]
        sigma = tri.gluings[s.tet][s.face_out]
        if (
            tri.neighbors[s.tet][s.face_out] != nxt.tet
            or sigma[s.vertex] != nxt.vertex
            or sigma[s.face_out] != nxt.face_in
        ):
            raise CurveError(f"cusp walk steps {i} -> {(i + 1) % n} do not match")
    transits = []
    for i, s in enumerate(steps):
        prev = steps[i - 1]
        sigma_in = tri.gluings[prev.tet][prev.face_out]
        entry_edge = frozenset(sigma_in[v] for v in prev.dual_pair)
        home = s.dual_pair
        twist_in = step_distance(s.face_in, home, entry_edge)
        if rotate_edge(s.face_in, home, twist_in) != entry_edge:
            raise CurveError(f"cusp walk step {i}: entry slot not adjacent to arc")
        transits.append(
            GammaArc(s.tet, s.face_in, s.face_out, twist_in=twist_in, twist_out=0)
        )
    check_closed(tri, transits)
    return transits


def cusp_dual_graph(tri: Triangulation) -> dict:
    """Adjacency of cusp triangles: (tet, vertex) -> list of
    (face, neighbor_tet, neighbor_vertex)."""
    graph = {}
    for j in range(tri.num_tetrahedra):
        for v in range(4):
            nbrs = []
            for f in range(4):
                if f == v:
                    continue
                sigma = tri.gluings[j][f]
                nbrs.append((f, tri.neighbors[j][f], sigma[v]))
            graph[(j, v)] = nbrs
    return graph
