import json

import pytest

from qtrace3d.fixture import FIGURE_EIGHT_JSON, figure_eight
from qtrace3d.triangulation import Triangulation


def test_fixture_invariants():
    tri = figure_eight()
    assert tri.num_tetrahedra == 2
    assert tri.edge_valences == [6, 6]
    assert len(tri.cusps) == 1
    assert tri.cusp_euler_characteristics == [0]
    assert tri.homology == [0]  # H_1 = Z: one free factor, no torsion


def test_parse_serialize_parse_identity():
    tri = figure_eight()
    text = tri.to_json()
    again = Triangulation.from_json(text)
    assert again.to_json() == text
    assert Triangulation.from_json(again.to_json()).to_json() == text


def test_rejects_non_involutive_gluing():
    data = json.loads(FIGURE_EIGHT_JSON)
    data["gluings"][0][0] = "0123"  # breaks mutuality with the partner face
    with pytest.raises(ValueError):
        Triangulation.from_json(json.dumps(data))


def test_rejects_orientation_reversing_gluing():
    data = json.loads(FIGURE_EIGHT_JSON)
    # an even permutation on a face gluing reverses orientation
    data["gluings"][0][0] = "0231"
    data["gluings"][1][1] = "0312"
    with pytest.raises(ValueError):
        Triangulation.from_json(json.dumps(data))


def test_edge_classes_cover_all_corners():
    tri = figure_eight()
    corners = [c for cls in tri.edge_classes for c in cls]
    # 6 edge-corners per tetrahedron, each in exactly one class
    assert len(corners) == 12
    assert len(set(corners)) == 12


def test_gluing_exponents_rows_sum_to_angle_condition():
    tri = figure_eight()
    rows = tri.gluing_exponents
    assert len(rows) == len(tri.edge_classes)
    for row in rows:
        # each edge class of the fixture has total degree 6
        assert sum(sum(t) for t in row) == 6
    # per-tetrahedron exponents over all edges sum to (2, 2, 2)
    for j in range(tri.num_tetrahedra):
        total = tuple(sum(row[j][i] for row in rows) for i in range(3))
        assert total == (2, 2, 2)
