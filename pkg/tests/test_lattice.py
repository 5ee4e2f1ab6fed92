import json

import pytest

from arcspace.lattice import (LatticePolytope, ZetaFunction, is_normal,
                              lattice_points, lift_zeta)


def test_unimodular_simplex_points():
    assert lattice_points([(0, 0), (1, 0), (1, 1)]) == [(0, 0), (1, 0), (1, 1)]


def test_segment_points():
    assert lattice_points([(0,), (3,)]) == [(0,), (1,), (2,), (3,)]


def test_curve_cone_points():
    pts = lattice_points([(0, 0), (1, 2), (2, 1)], "colex")
    assert set(pts) == {(0, 0), (1, 1), (2, 1), (1, 2)}
    # colex enumeration matches the catalog convention
    assert pts == [(0, 0), (1, 1), (2, 1), (1, 2)]


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        lattice_points([(0, 0), (1,)])


def test_points_idempotent():
    pts = lattice_points([(0, 0), (2, 0), (0, 2)])
    again = lattice_points(pts)
    assert again == pts


def test_unit_cube_normal():
    cube = LatticePolytope.from_vertices(
        [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)])
    assert is_normal(cube)


def test_segments_normal():
    for z in (1, 2, 5):
        seg = LatticePolytope.from_vertices([(0,), (z,)])
        assert is_normal(seg)


def test_reeve_simplex_not_normal():
    reeve = LatticePolytope.from_vertices(
        [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)])
    assert not is_normal(reeve, k_max=2)
    assert not is_normal(reeve)


def test_lift_segment_one():
    seg = LatticePolytope.from_vertices([(0,), (1,)], "colex")
    lifted = lift_zeta(seg, ZetaFunction.from_sequence([0, 1]))
    assert set(lifted.points) == {(0, 1), (1, 0), (1, 1)}
    assert len(lifted.points) == 3


def test_lift_constant_is_prism():
    seg = LatticePolytope.from_vertices([(0,), (2,)], "colex")
    lifted = lift_zeta(seg, ZetaFunction.constant(seg, 2))
    assert set(lifted.points) == {(i, j) for i in range(3) for j in range(3)}


def test_lift_segment_two():
    seg = LatticePolytope.from_vertices([(0,), (2,)], "colex")
    lifted = lift_zeta(seg, ZetaFunction.from_sequence([0, 1, 2]))
    assert len(lifted.points) == 6
    assert set(lifted.points) == {(0, 2), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)}
    # points ordered by (height, base index)
    assert lifted.points == [(2, 0), (1, 1), (2, 1), (0, 2), (1, 2), (2, 2)]


def test_lift_rejects_bad_profile():
    seg = LatticePolytope.from_vertices([(0,), (2,)], "colex")
    with pytest.raises(ValueError):
        lift_zeta(seg, ZetaFunction.from_sequence([0, 0, 1]))
    with pytest.raises(ValueError):
        lift_zeta(seg, ZetaFunction({(0,): 1, (2,): 1}))  # undefined at (1,)


def test_lifted_catalog_normal():
    from arcspace.catalog import default_catalog
    for entry in default_catalog():
        assert is_normal(entry.polytope), entry.name


def test_json_round_trip():
    poly = LatticePolytope.from_vertices([(0, 0), (1, 2), (2, 1)], "colex")
    doc = json.loads(json.dumps(poly.to_json()))
    again = LatticePolytope.from_json(doc)
    assert again.points == poly.points
    assert again.point_order == poly.point_order


def test_json_rejects_unknown_order():
    with pytest.raises(ValueError):
        LatticePolytope.from_json({"dim": 1, "vertices": [[0], [1]],
                                   "order": "mystery"})
