"""Solving the gluing equations and lifting shapes to square roots.

A shape assignment gives each tetrahedron a parameter Z not in {0, 1}, with
Z' = 1/(1-Z) and Z'' = 1 - 1/Z; an edge equation asks that the product of
the corner parameters around the edge class be 1 (the complete structure
additionally has angle sum 2 pi, which we do not impose here).  The gluing
variety is sampled by pinning a few shapes to random values and solving
the remaining equations numerically.

For trace computations the shapes are lifted to square roots (z, z'')
with z^2 = Z, z''^2 = Z'' and z' := i z^{-1} z''^{-1} (so z z' z'' = i and
z'^2 = -1/(z z'')^2 = Z' automatically); a lift is accepted when the
lifted product around every edge class equals -1.
"""

from __future__ import annotations

import cmath
import itertools
import random

import numpy as np
from scipy.optimize import least_squares

from .triangulation import Triangulation


def shape_triple(Z: complex) -> tuple[complex, complex, complex]:
    return Z, 1 / (1 - Z), 1 - 1 / Z


def gluing_residuals(tri: Triangulation, shapes) -> list[complex]:
    """Per edge class: product of corner parameters minus 1."""
    out = []
    for row in tri.gluing_exponents:
        prod = 1 + 0j
        for j, (a, b, c) in enumerate(row):
            Z, Zp, Zpp = shape_triple(complex(shapes[j]))
            prod *= Z**a * Zp**b * Zpp**c
        out.append(prod - 1)
    return out


def _degenerate(shapes) -> bool:
    for Z in shapes:
        if min(abs(Z), abs(Z - 1)) < 1e-3 or abs(Z) > 1e3:
            return True
    return False


def solve_pinned(
    tri: Triangulation, pins: dict[int, complex], rng: random.Random, attempts: int = 40
):
    """Solve the gluing equations with some shapes pinned; returns the full
    shape tuple or None if no nondegenerate solution was found."""
    n = tri.num_tetrahedra
    free = [j for j in range(n) if j not in pins]

    def assemble(x):
        shapes = [0j] * n
        for j, v in pins.items():
            shapes[j] = v
        for i, j in enumerate(free):
            shapes[j] = complex(x[2 * i], x[2 * i + 1])
        return shapes

    def fun(x):
        shapes = assemble(x)
        for Z in shapes:
            if min(abs(Z), abs(Z - 1)) < 1e-12:
                return [1e6] * (2 * len(tri.gluing_exponents))
        res = gluing_residuals(tri, shapes)
        return [v for r in res for v in (r.real, r.imag)]

    for _ in range(attempts):
        x0 = []
        for _j in free:
            Z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            x0.extend([Z.real, Z.imag])
        sol = least_squares(fun, x0, method="lm", xtol=1e-15, ftol=1e-15, gtol=1e-15)
        shapes = assemble(sol.x)
        if max(abs(r) for r in gluing_residuals(tri, shapes)) < 1e-10 and not _degenerate(
            shapes
        ):
            return shapes
    return None


def variety_points(tri: Triangulation, count: int, rng: random.Random, pin_count=None):
    """Sample points of the gluing variety by pin-and-solve."""
    if pin_count is None:
        pin_count = len(tri.cusps)
    points = []
    guard = 0
    while len(points) < count and guard < 100 * count:
        guard += 1
        pins = {}
        for j in range(min(pin_count, tri.num_tetrahedra - 0)):
            pins[j] = complex(rng.uniform(-2, 2), rng.uniform(0.1, 2))
        if _degenerate(pins.values()):
            continue
        shapes = solve_pinned(tri, pins, rng, attempts=10)
        if shapes is not None:
            points.append(tuple(shapes))
    return points


def accepted_lifts(tri: Triangulation, shapes, tol: float = 1e-9):
    """All square-root lifts with lifted edge products equal to -1.

    Returns a list of tuples of (z_j, z''_j) pairs.
    """
    roots = []
    for Z in shapes:
        _, _, Zpp = shape_triple(complex(Z))
        roots.append((cmath.sqrt(Z), cmath.sqrt(Zpp)))
    out = []
    n = len(roots)
    for signs in itertools.product((1, -1), repeat=2 * n):
        lifts = tuple(
            (signs[2 * j] * roots[j][0], signs[2 * j + 1] * roots[j][1])
            for j in range(n)
        )
        ok = True
        for row in tri.gluing_exponents:
            prod = 1 + 0j
            for j, (a, b, c) in enumerate(row):
                z, zpp = lifts[j]
                zp = 1j / (z * zpp)
                prod *= z**a * zp**b * zpp**c
            if abs(prod + 1) > tol:
                ok = False
                break
        if ok:
            out.append(lifts)
    return out


def lift_values(lifts) -> list[complex]:
    """Flatten lift pairs into the generator value list (z_0, z''_0, ...)."""
    return [v for pair in lifts for v in pair]
