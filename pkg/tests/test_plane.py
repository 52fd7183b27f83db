import json
import warnings

import pytest

from dpd.construct import PaddingError, from_coordinates, from_named_faces, pad
from dpd.plane import (Disconnected, EulerViolation, NonSimple, PlaneGraph, UnknownOuterFace,
                       separating_3_cycles, triangles)


def square():
    return PlaneGraph(4, [[1, 3], [2, 0], [3, 1], [0, 2]], [0, 1, 2, 3])


def test_square_faces():
    G = square()
    assert len(G.faces) == 2
    assert sorted(f.degree for f in G.faces) == [4, 4]
    assert G.faces[G.outer].degree == 4
    assert not any(G.is_internal(v) for v in range(4))


def test_outer_face_by_id_and_reversed_walk():
    G = square()
    H = PlaneGraph(4, G.rotations, [3, 2, 1, 0])
    assert H.outer in (0, 1)
    with pytest.raises(UnknownOuterFace):
        PlaneGraph(4, G.rotations, 7)
    with pytest.raises(UnknownOuterFace):
        PlaneGraph(4, G.rotations, [0, 2, 1, 3])


@pytest.mark.parametrize("rots,err", [
    ([[1, 1], [0, 0]], NonSimple),
    ([[0]], NonSimple),
    ([[1], []], NonSimple),
    ([[1], [0], [3], [2]], Disconnected),
    ([[5], [0]], NonSimple),
])
def test_rejects(rots, err):
    with pytest.raises(err):
        PlaneGraph(len(rots), rots, 0)


def test_non_planar_rotation_fails_euler():
    # K4 with one rotation reversed traces a torus-like surface
    rots = [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]]
    with pytest.raises(EulerViolation):
        PlaneGraph(4, rots, 0)


def test_json_round_trip_and_unknown_key_warning():
    G = square()
    H = PlaneGraph.from_json(json.dumps(G.to_json()))
    assert H.rotations == G.rotations and H.outer == G.outer
    data = dict(G.to_json(), colour="red")
    with pytest.warns(UserWarning, match="unknown graph keys"):
        PlaneGraph.from_json(data)


def test_dump_load(tmp_path):
    G = square()
    G.dump(tmp_path / "g.json")
    assert PlaneGraph.load(tmp_path / "g.json").to_json() == G.to_json()


def test_face_queries_k4():
    G, ids = from_named_faces([s.split() for s in ["a b c", "a b d", "b c d", "c a d"]])
    d = ids["d"]
    assert G.degree(d) == 3
    assert len(G.faces_incident(d)) == 3
    assert G.is_internal(d)
    for f in range(4):
        assert len(G.adjacent_faces(f)) == 3
    assert not any(G.is_internal_face(f) for f in range(4))
    st = G.stats(d)
    assert (st.degree, st.is_internal, st.t) == (3, True, 3)
    assert len(triangles(G)) == 4
    assert separating_3_cycles(G) == []


def test_separating_triangle_in_stacked_k4(entries):
    G = entries["stacked-k4"].graph
    seps = separating_3_cycles(G)
    assert len(seps) == 1
    tri, inside, outside = seps[0]
    assert len(inside) == 1 and len(outside) == 1


def test_octahedron_has_no_separating_triangle(entries):
    assert separating_3_cycles(entries["octahedron"].graph) == []


def test_from_coordinates_picks_largest_face():
    coords = [(0, 0), (2, 0), (1, 2), (1, 0.7)]
    G = from_coordinates(coords, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])
    assert sorted(G.faces[G.outer].boundary) == [0, 1, 2]


def test_pad_reaches_targets():
    G, ids = from_named_faces([["a", "b", "c"], ["a", "b", "c"]])
    P = pad(G, {0: 4, 1: 4, 2: 5})
    assert [P.graph.degree(v) for v in range(3)] == [4, 4, 5]
    with pytest.raises(PaddingError):
        pad(G, {0: 1})


def test_every_edge_on_two_face_sides(entries):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        for e in entries.values():
            G = e.graph
            sides = sum(f.degree for f in G.faces)
            assert sides == 2 * len(G.edges)
            assert G.n - len(G.edges) + len(G.faces) == 2
