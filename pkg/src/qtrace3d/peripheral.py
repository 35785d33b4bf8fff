"""Peripheral curves: cusp developing maps and curve identification.

The link of a cusp is triangulated by the vertex links of the tetrahedra.
Given shape parameters, each cusp triangle develops into the plane as a
Euclidean similarity triangle, and a closed walk in the dual graph of the
cusp triangulation develops to a similarity ``z -> dilation * z + trans``.
For a solution of the gluing equations the dilation is 1 exactly when the
solution is complete at that cusp, and ``trans`` is then the translation
part of the peripheral class - zero iff the walk is peripherally trivial.

Corner conventions: the cusp triangle at (tet j, ideal vertex v) has its
corners at the other three vertices w, listed counterclockwise as (a, b, c)
with (v, a, b, c) an even permutation; the similarity ratio at corner w is
the shape parameter of the tetrahedron edge {v, w}.
"""

from __future__ import annotations

from .lantern import CuspStep, CurveError
from .triangulation import SHAPE_TYPE, Triangulation

CORNER_CYCLE = {0: (1, 2, 3), 1: (0, 3, 2), 2: (0, 1, 3), 3: (0, 2, 1)}


def shape_value(shapes, j: int, v: int, w: int) -> complex:
    """Shape parameter at corner w of cusp triangle (j, v)."""
    z = complex(shapes[j])
    return (z, 1 / (1 - z), 1 - 1 / z)[SHAPE_TYPE[frozenset({v, w})]]


def place_third(p1: complex, p2: complex, s1: complex) -> complex:
    """Third corner of a similarity triangle from two corners and the shape
    at the first: for ccw corners (w1, w2, w3), p3 = p1 + s1 (p2 - p1)."""
    return p1 + s1 * (p2 - p1)


def develop_triangle(tri, shapes, j, v, placed: dict) -> dict:
    """Complete a partial placement (two corners) of cusp triangle (j, v)."""
    cyc = CORNER_CYCLE[v]
    missing = [w for w in cyc if w not in placed]
    if len(missing) != 1:
        raise CurveError("need exactly two placed corners")
    (w3,) = missing
    i = cyc.index(w3)
    w1, w2 = cyc[(i + 1) % 3], cyc[(i + 2) % 3]
    # (w1, w2, w3) is ccw; third corner from the shape at w1
    out = dict(placed)
    out[w3] = place_third(placed[w1], placed[w2], shape_value(shapes, j, v, w1))
    return out


def develop_walk(tri: Triangulation, steps: list[CuspStep], shapes):
    """Holonomy (dilation, translation) of a closed dual walk on a cusp.

    The translation is measured in the frame of the first triangle's
    starting side, so it is comparable across walks developed from the same
    starting triangle and side.
    """
    if not steps:
        raise CurveError("empty walk")
    s0 = steps[0]
    cyc = CORNER_CYCLE[s0.vertex]
    # start by placing the entry side of the first triangle at 0 and 1:
    # the entry side consists of the two corners away from face_in
    w1, w2 = [w for w in cyc if w != s0.face_in]
    placed = develop_triangle(tri, shapes, s0.tet, s0.vertex, {w1: 0.0, w2: 1.0})
    start = dict(placed)
    j, v = s0.tet, s0.vertex
    for i, s in enumerate(steps):
        if (s.tet, s.vertex) != (j, v):
            raise CurveError(f"walk step {i} does not continue the previous one")
        sigma = tri.gluings[j][s.face_out]
        j2, v2 = tri.neighbors[j][s.face_out], sigma[s.vertex]
        shared = {sigma[w]: placed[w] for w in range(4) if w not in (v, s.face_out)}
        nxt = steps[(i + 1) % len(steps)]
        if (nxt.tet, nxt.vertex, nxt.face_in) != (j2, v2, sigma[s.face_out]):
            raise CurveError(f"walk steps {i} -> {(i + 1) % len(steps)} do not match")
        placed = develop_triangle(tri, shapes, j2, v2, shared)
        j, v = j2, v2
    # the walk has returned to the starting triangle: compare placements
    ws = list(start)
    p, q = start[ws[0]], start[ws[1]]
    pp, qq = placed[ws[0]], placed[ws[1]]
    dilation = (qq - pp) / (q - p)
    trans = pp - dilation * p
    return dilation, trans


def homology_image(tri: Triangulation, steps: list[CuspStep]) -> list[int]:
    """Class of the walk in H_1 of the manifold, in the coordinates of the
    dual-spine presentation (one generator per face pairing outside a
    spanning tree of the dual graph, relations from the edge classes).

    Returns the coefficient vector of the class in the invariant-factor
    decomposition computed by :meth:`Triangulation.homology` (free parts
    first); the zero vector means the walk is null-homologous.
    """
    from sympy import Matrix
    from sympy.matrices.normalforms import smith_normal_form

    row = [0] * len(tri.face_pairings)
    for s in steps:
        idx, sign = tri.face_pairing_index(s.tet, s.face_out)
        row[idx] += sign
    # same tree contraction as Triangulation.homology
    tree: set[int] = set()
    reached = {0}
    changed = True
    while changed:
        changed = False
        for idx, (j, f) in enumerate(tri.face_pairings):
            jj = tri.neighbors[j][f]
            if (j in reached) != (jj in reached):
                tree.add(idx)
                reached.update({j, jj})
                changed = True
    free_cols = [i for i in range(len(tri.face_pairings)) if i not in tree]
    rows = []
    for walk in tri.edge_classes:
        r = [0] * len(tri.face_pairings)
        j, a, b = walk[0]
        f = min(set(range(4)) - {a, b})
        for _ in walk:
            idx, sign = tri.face_pairing_index(j, f)
            r[idx] += sign
            sigma = tri.gluings[j][f]
            j2 = tri.neighbors[j][f]
            a2, b2, came_from = sigma[a], sigma[b], sigma[f]
            f2 = next(iter(set(range(4)) - {a2, b2, came_from}))
            j, a, b, f = j2, a2, b2, f2
        rows.append([r[i] for i in free_cols])
    m = Matrix(rows).T  # columns = relations
    vec = Matrix([row[i] for i in free_cols])
    # reduce vec modulo the column lattice of m via its Smith decomposition
    from sympy.matrices.normalforms import smith_normal_decomp

    try:
        d, u, v = smith_normal_decomp(m)
    except Exception:  # older sympy: compute transforms by hand
        d, u, v = _smith_with_transform(m)
    w = u * vec
    out = []
    for i in range(len(free_cols)):
        di = int(d[i, i]) if i < min(d.shape) else 0
        wi = int(w[i])
        out.append(wi % abs(di) if di not in (0,) and abs(di) > 1 else (0 if di and abs(di) == 1 else wi))
    return out


def _smith_with_transform(m):
    """Smith normal form D = U m V with unimodular transforms (fallback)."""
    from sympy import Matrix, eye

    a = Matrix(m)
    rows, cols = a.shape
    u, v = eye(rows), eye(cols)

    def min_pivot(a, t):
        best = None
        for i in range(t, a.rows):
            for j in range(t, a.cols):
                if a[i, j] != 0 and (best is None or abs(a[i, j]) < abs(a[best[0], best[1]])):
                    best = (i, j)
        return best

    t = 0
    while t < min(a.rows, a.cols):
        piv = min_pivot(a, t)
        if piv is None:
            break
        i, j = piv
        a.row_swap(t, i); u.row_swap(t, i)
        a.col_swap(t, j); v.col_swap(t, j)
        done = False
        while not done:
            done = True
            for i in range(t + 1, a.rows):
                if a[i, t] != 0:
                    q = a[i, t] // a[t, t]
                    a.row_op(i, lambda x, k: x - q * a[t, k])
                    u.row_op(i, lambda x, k: x - q * u[t, k])
                    if a[i, t] != 0:
                        a.row_swap(t, i); u.row_swap(t, i)
                        done = False
            for j in range(t + 1, a.cols):
                if a[t, j] != 0:
                    q = a[t, j] // a[t, t]
                    a.col_op(j, lambda x, k: x - q * a[k, t])
                    v.col_op(j, lambda x, k: x - q * v[k, t])
                    if a[t, j] != 0:
                        a.col_swap(t, j); v.col_swap(t, j)
                        done = False
        if a[t, t] < 0:
            a.row_op(t, lambda x, k: -x); u.row_op(t, lambda x, k: -x)
        t += 1
    return a, u, v


def enumerate_cusp_walks(tri: Triangulation, start, max_len: int):
    """Closed dual walks on a cusp starting at (tet, vertex, face_in),
    without immediate backtracking, up to the given length."""
    j0, v0, f0 = start

    def extend(path, j, v, f_in):
        if path and (j, v, f_in) == (j0, v0, f0):
            yield list(path)
        if len(path) >= max_len:
            return
        for f_out in range(4):
            if f_out in (v, f_in):
                continue
            step = CuspStep(j, v, f_in, f_out)
            sigma = tri.gluings[j][f_out]
            yield from extend(
                path + [step], tri.neighbors[j][f_out], sigma[v], sigma[f_out]
            )

    yield from extend([], j0, v0, f0)
