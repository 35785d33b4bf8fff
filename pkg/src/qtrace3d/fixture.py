"""Built-in example: the two-tetrahedron figure-eight knot complement.

Both tetrahedra are glued to each other along all four faces; the two edge
classes have valence six, and the single cusp is a torus triangulated by
eight link triangles.  The complete hyperbolic structure has both shapes
equal to ``exp(i pi / 3)``.

The meridian and longitude are stored as closed dual walks on the cusp
(see :mod:`.peripheral`): the meridian crosses two cusp triangles and the
null-homologous longitude crosses eight.
"""

from __future__ import annotations

import cmath

from .lantern import CuspStep, cusp_walk_transits
from .triangulation import Triangulation

FIGURE_EIGHT_JSON = (
    '{"num_tetrahedra": 2,'
    ' "neighbors": [[1, 1, 1, 1], [0, 0, 0, 0]],'
    ' "gluings": [["0132", "1302", "1023", "2031"],'
    ' ["0132", "1302", "1023", "2031"]]}'
)

COMPLETE_SHAPES = (cmath.exp(1j * cmath.pi / 3), cmath.exp(1j * cmath.pi / 3))

MERIDIAN_WALK = (
    CuspStep(0, 1, 3, 2),
    CuspStep(1, 0, 2, 1),
)

LONGITUDE_WALK = (
    CuspStep(0, 1, 3, 0),
    CuspStep(1, 1, 0, 2),
    CuspStep(0, 0, 2, 3),
    CuspStep(1, 2, 1, 0),
    CuspStep(0, 3, 0, 2),
    CuspStep(1, 3, 2, 1),
    CuspStep(0, 2, 3, 1),
    CuspStep(1, 0, 3, 1),
)


def figure_eight() -> Triangulation:
    """The figure-eight knot complement triangulation.

    >>> tri = figure_eight()
    >>> tri.num_tetrahedra, tri.edge_valences
    (2, [6, 6])
    """
    return Triangulation.from_json(FIGURE_EIGHT_JSON)


def meridian_transits(tri: Triangulation | None = None):
    return cusp_walk_transits(tri or figure_eight(), list(MERIDIAN_WALK))


def longitude_transits(tri: Triangulation | None = None):
    return cusp_walk_transits(tri or figure_eight(), list(LONGITUDE_WALK))
