"""Ideal triangulations of cusped 3-manifolds.

A triangulation is a set of ideal tetrahedra with vertices labelled 0..3 and
faces indexed by the opposite vertex.  Face f of tetrahedron j is glued to
face ``gluings[j][f][f]`` of ``neighbors[j][f]`` via the vertex permutation
``gluings[j][f]``.

JSON format::

    {"num_tetrahedra": 2,
     "neighbors": [[1,1,1,1],[0,0,0,0]],
     "gluings":   [["0132", ...], [...]]}

where each permutation is written as the 4-digit string sigma(0)sigma(1)
sigma(2)sigma(3).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property


Perm = tuple[int, int, int, int]

# shape-parameter type of a tetrahedron edge: z, z' or z''
SHAPE_TYPE = {
    frozenset({0, 1}): 0,
    frozenset({2, 3}): 0,
    frozenset({0, 2}): 1,
    frozenset({1, 3}): 1,
    frozenset({0, 3}): 2,
    frozenset({1, 2}): 2,
}

EDGE_PAIRS = sorted(SHAPE_TYPE, key=sorted)


def perm_inverse(p: Perm) -> Perm:
    out = [0] * 4
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def perm_sign(p: Perm) -> int:
    s = 1
    for i in range(4):
        for j in range(i + 1, 4):
            if p[i] > p[j]:
                s = -s
    return s


class TriangulationError(ValueError):
    pass


@dataclass(frozen=True)
class Triangulation:
    neighbors: tuple[tuple[int, int, int, int], ...]
    gluings: tuple[tuple[Perm, Perm, Perm, Perm], ...]

    def __post_init__(self):
        n = len(self.neighbors)
        if len(self.gluings) != n:
            raise TriangulationError("neighbors/gluings length mismatch")
        for j in range(n):
            for f in range(4):
                jj = self.neighbors[j][f]
                sigma = self.gluings[j][f]
                if sorted(sigma) != [0, 1, 2, 3]:
                    raise TriangulationError(f"invalid permutation at ({j},{f})")
                if not 0 <= jj < n:
                    raise TriangulationError(f"invalid neighbor at ({j},{f})")
                ff = sigma[f]
                if self.neighbors[jj][ff] != j:
                    raise TriangulationError(f"gluing at ({j},{f}) is not mutual")
                if self.gluings[jj][ff] != perm_inverse(sigma):
                    raise TriangulationError(f"gluing at ({j},{f}) is not involutive")
                if perm_sign(sigma) != -1:
                    raise TriangulationError(
                        f"gluing at ({j},{f}) is orientation-violating"
                    )

    @property
    def num_tetrahedra(self) -> int:
        return len(self.neighbors)

    # -- JSON -----------------------------------------------------------

    @staticmethod
    def from_json(text: str) -> "Triangulation":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise TriangulationError(f"invalid JSON: {exc}") from exc
        try:
            n = data["num_tetrahedra"]
            neighbors = tuple(tuple(int(x) for x in row) for row in data["neighbors"])
            gluings = tuple(
                tuple(tuple(int(ch) for ch in perm) for perm in row)
                for row in data["gluings"]
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise TriangulationError(f"malformed triangulation data: {exc}") from exc
        if n != len(neighbors):
            raise TriangulationError("num_tetrahedra disagrees with table size")
        return Triangulation(neighbors, gluings)

    def to_json(self) -> str:
        return json.dumps(
            {
                "num_tetrahedra": self.num_tetrahedra,
                "neighbors": [list(row) for row in self.neighbors],
                "gluings": [
                    ["".join(str(v) for v in perm) for perm in row]
                    for row in self.gluings
                ],
            }
        )

    def glue(self, j: int, f: int, vertices):
        """Image of tet-j vertices across face f."""
        sigma = self.gluings[j][f]
        return self.neighbors[j][f], tuple(sigma[v] for v in vertices)

    # -- edge classes -----------------------------------------------------

    @cached_property
    def edge_classes(self) -> list[list[tuple[int, int, int]]]:
        """Each class is the cyclic corner walk around the edge: a list of
        oriented corners (tet, tail vertex, head vertex), one per tetrahedron
        the walk passes through (with multiplicity)."""
        seen: set[tuple[int, frozenset]] = set()
        classes = []
        for j0 in range(self.num_tetrahedra):
            for pair in EDGE_PAIRS:
                a0, b0 = sorted(pair)
                if (j0, pair) in seen:
                    continue
                walk = []
                j, a, b = j0, a0, b0
                # leave through one of the two faces containing the edge
                f = min(set(range(4)) - {a, b})
                while True:
                    walk.append((j, a, b))
                    seen.add((j, frozenset({a, b})))
                    sigma = self.gluings[j][f]
                    j2 = self.neighbors[j][f]
                    a2, b2, came_from = sigma[a], sigma[b], sigma[f]
                    f2 = next(iter(set(range(4)) - {a2, b2, came_from}))
                    j, a, b, f = j2, a2, b2, f2
                    if (j, a, b) == (j0, a0, b0):
                        break
                classes.append(walk)
        return classes

    @cached_property
    def edge_valences(self) -> list[int]:
        return [len(walk) for walk in self.edge_classes]

    def edge_class_index(self, tet: int, v: int, w: int) -> int:
        key = (tet, frozenset({v, w}))
        for i, walk in enumerate(self.edge_classes):
            for (j, a, b) in walk:
                if (j, frozenset({a, b})) == key:
                    return i
        raise TriangulationError(f"no edge class for {tet},{v},{w}")

    # -- cusps ------------------------------------------------------------

    @cached_property
    def cusps(self) -> list[list[tuple[int, int]]]:
        """Orbits of ideal vertices (tet, vertex)."""
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for j in range(self.num_tetrahedra):
            for v in range(4):
                parent[(j, v)] = (j, v)
        for j in range(self.num_tetrahedra):
            for f in range(4):
                sigma = self.gluings[j][f]
                for v in range(4):
                    if v != f:
                        a, b = find((j, v)), find((self.neighbors[j][f], sigma[v]))
                        if a != b:
                            parent[a] = b
        orbits: dict = {}
        for x in parent:
            orbits.setdefault(find(x), []).append(x)
        return [sorted(o) for o in sorted(orbits.values())]

    def cusp_index(self, tet: int, v: int) -> int:
        for i, cusp in enumerate(self.cusps):
            if (tet, v) in cusp:
                return i
        raise TriangulationError("bad vertex")

    @cached_property
    def cusp_euler_characteristics(self) -> list[int]:
        """chi of each link surface (0 for torus cusps)."""
        # link vertices: corners (tet, v, w) glued across the two faces
        # away from the corner edge
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        corners = [
            (j, v, w)
            for j in range(self.num_tetrahedra)
            for v in range(4)
            for w in range(4)
            if v != w
        ]
        for c in corners:
            parent[c] = c
        for (j, v, w) in corners:
            for f in set(range(4)) - {v, w}:
                sigma = self.gluings[j][f]
                other = (self.neighbors[j][f], sigma[v], sigma[w])
                a, b = find((j, v, w)), find(other)
                if a != b:
                    parent[a] = b
        chis = []
        for cusp in self.cusps:
            faces = len(cusp)
            edges = 3 * faces // 2
            verts = len(
                {find((j, v, w)) for (j, v) in cusp for w in set(range(4)) - {v}}
            )
            chis.append(verts - edges + faces)
        return chis

    # -- algebraic invariants ----------------------------------------------

    @cached_property
    def face_pairings(self) -> list[tuple[int, int]]:
        """One canonical side (tet, face) per face-pairing class."""
        out = []
        seen = set()
        for j in range(self.num_tetrahedra):
            for f in range(4):
                if (j, f) in seen:
                    continue
                out.append((j, f))
                seen.add((j, f))
                jj = self.neighbors[j][f]
                seen.add((jj, self.gluings[j][f][f]))
        return out

    def face_pairing_index(self, tet: int, f: int) -> tuple[int, int]:
        """(index, sign): sign +1 if (tet, f) is the canonical side."""
        for i, (j, g) in enumerate(self.face_pairings):
            if (j, g) == (tet, f):
                return i, +1
            if (self.neighbors[j][g], self.gluings[j][g][g]) == (tet, f):
                return i, -1
        raise TriangulationError("bad face")

    @cached_property
    def homology(self) -> list[int]:
        """Invariant factors of H_1(M), e.g. [0] for Z, [0, 5] for Z + Z/5.

        Computed from the dual-spine presentation of pi_1: one generator per
        face pairing, one relator per edge class (the word of faces crossed
        while walking around the edge).
        """
        from sympy import Matrix
        from sympy.matrices.normalforms import smith_normal_form

        rows = []
        for walk in self.edge_classes:
            row = [0] * len(self.face_pairings)
            j, a, b = walk[0]
            f = min(set(range(4)) - {a, b})
            for _ in walk:
                idx, sign = self.face_pairing_index(j, f)
                row[idx] += sign
                sigma = self.gluings[j][f]
                j2 = self.neighbors[j][f]
                a2, b2, came_from = sigma[a], sigma[b], sigma[f]
                f2 = next(iter(set(range(4)) - {a2, b2, came_from}))
                j, a, b, f = j2, a2, b2, f2
            rows.append(row)
        # contract a spanning tree of the dual graph (tets as vertices,
        # face pairings as edges) before abelianizing
        tree: set[int] = set()
        reached = {0}
        changed = True
        while changed:
            changed = False
            for idx, (j, f) in enumerate(self.face_pairings):
                jj = self.neighbors[j][f]
                if (j in reached) != (jj in reached):
                    tree.add(idx)
                    reached.update({j, jj})
                    changed = True
        free_cols = [i for i in range(len(self.face_pairings)) if i not in tree]
        m = Matrix([[row[i] for i in free_cols] for row in rows])
        snf = smith_normal_form(m)
        diag = [int(snf[i, i]) for i in range(min(snf.shape))]
        factors = []
        rank_free = len(free_cols) - sum(1 for d in diag if d != 0)
        for d in diag:
            if abs(d) > 1:
                factors.append(abs(d))
        return [0] * rank_free + sorted(factors)

    # -- gluing equations ----------------------------------------------------

    @cached_property
    def gluing_exponents(self) -> list[list[tuple[int, int, int]]]:
        """Per edge class, per tetrahedron: exponents (a, b, c) of
        Z_j^a Z'_j^b Z''_j^c in the edge equation (product over j equals 1)."""
        out = []
        for walk in self.edge_classes:
            exps = [[0, 0, 0] for _ in range(self.num_tetrahedra)]
            for (j, a, b) in walk:
                exps[j][SHAPE_TYPE[frozenset({a, b})]] += 1
            out.append([tuple(e) for e in exps])
        return out

    def info(self) -> dict:
        return {
            "num_tetrahedra": self.num_tetrahedra,
            "edge_valences": self.edge_valences,
            "num_cusps": len(self.cusps),
            "cusp_euler_characteristics": self.cusp_euler_characteristics,
            "cusp_triangle_counts": [len(c) for c in self.cusps],
            "homology": self.homology,
        }
