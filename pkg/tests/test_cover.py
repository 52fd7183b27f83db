import itertools

import numpy as np
import pytest

from dpd.cover import (Cover, InvalidCover, InvalidPartial, InvalidTransversal, RaggedLists, TooLarge,
                       WeightFn, dp_chromatic, extend_transversal, induced_degrees, is_strictly_f_degenerate,
                       list_assignment_to_cover, spanning_forest, transversal_from_picks,
                       transversal_to_colouring)
from dpd.plane import PlaneGraph

TRI = [(0, 1), (1, 2), (0, 2)]


def test_cover_validation():
    with pytest.raises(InvalidCover):
        Cover.build(2, 2, {(0, 1): [(0, 0), (1, 0)]})
    with pytest.raises(InvalidCover):
        Cover.build(2, 2, {(0, 1): [(0, 2)]})
    with pytest.raises(InvalidCover):
        Cover(2, 2, ((0, 1),), {(0, 2): frozenset()})
    with pytest.raises(InvalidCover):
        WeightFn.of([[3, 0]])


def test_build_accepts_either_orientation():
    c = Cover.build(2, 3, {(1, 0): [(0, 2)]})
    assert c.matchings[(0, 1)] == frozenset({(2, 0)})
    assert c.color_map(0, 1) == [-1, -1, 0]
    assert c.color_map(1, 0) == [2, -1, -1]


def test_json_round_trip_one_based():
    c = Cover.build(3, 2, {(0, 1): [(0, 1)], (1, 2): [(1, 1), (0, 0)]}, [(0, 1), (1, 2)])
    f = WeightFn.of([[1, 0], [2, 1], [1, 1]])
    data = c.to_json(f)
    assert data["matchings"][0]["pairs"] == [[1, 2]]
    c2, f2 = Cover.from_json(data)
    assert c2 == c and f2 == f
    c3, f3 = Cover.from_json({"s": 2, "matchings": data["matchings"]}, n=3)
    assert f3 == WeightFn.ones(3, 2)


def test_sfd_triangle():
    c = Cover.identity(3, 3, TRI)
    f = WeightFn.ones(3, 3)
    assert is_strictly_f_degenerate(c, f, [0, 1, 2])
    assert not is_strictly_f_degenerate(c, f, [0, 0, 1])
    assert induced_degrees(c, [0, 0, 1]) == [1, 1, 0]
    f2 = WeightFn.of([[2, 2, 2]] * 3)
    # weight 2 lets a path of equal colours peel
    assert is_strictly_f_degenerate(c, f2, [0, 0, 1])
    assert not is_strictly_f_degenerate(c, f2, [0, 0, 0])
    assert is_strictly_f_degenerate(c, f, [-1, -1, -1])


def test_transversal_errors():
    c = Cover.identity(3, 3, TRI)
    with pytest.raises(InvalidTransversal):
        transversal_from_picks(3, [(0, 1), (0, 2)])
    with pytest.raises(InvalidTransversal):
        is_strictly_f_degenerate(c, WeightFn.ones(3, 3), [0, 1])
    with pytest.raises(InvalidTransversal):
        is_strictly_f_degenerate(c, WeightFn.ones(3, 3), [0, 1, 5])
    with pytest.raises(InvalidPartial):
        extend_transversal(c, WeightFn.ones(3, 3), [0, 0, -1])


def test_extend():
    c = Cover.identity(3, 3, TRI)
    f = WeightFn.ones(3, 3)
    T = extend_transversal(c, f, [2, -1, -1])
    assert T[0] == 2 and sorted(T) == [0, 1, 2]
    c2 = Cover.identity(3, 2, TRI)
    assert extend_transversal(c2, WeightFn.ones(3, 2)) is None


def test_weight_zero_forbids_colour():
    c = Cover.identity(2, 2, [(0, 1)])
    f = WeightFn.of([[0, 1], [0, 1]])
    assert extend_transversal(c, f) is None
    assert extend_transversal(c, WeightFn.of([[0, 1], [1, 0]])) == [1, 0]


def test_list_assignment():
    lists = [["r", "g"], ["g", "b"], ["r", "b", "y"]]
    c, f = list_assignment_to_cover(lists, TRI)
    T = extend_transversal(c, f)
    cols = transversal_to_colouring(lists, T)
    assert len(set(cols)) == 3
    with pytest.raises(RaggedLists):
        list_assignment_to_cover([["a", "a"], ["b"]], [(0, 1)])
    with pytest.raises(RaggedLists):
        list_assignment_to_cover([[], []], [(0, 1)])


def test_list_colouring_agrees_with_brute_force():
    rng = np.random.default_rng(5)
    for _ in range(60):
        lists = [list(rng.choice(5, size=2, replace=False)) for _ in range(4)]
        edges = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]
        brute = any(all(col[u] != col[v] for u, v in edges) for col in itertools.product(*lists))
        c, f = list_assignment_to_cover(lists, edges)
        assert (extend_transversal(c, f) is not None) == brute


def test_spanning_forest():
    tree, rest = spanning_forest(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    assert len(tree) == 3 and len(rest) == 1


def test_dp_chromatic_small():
    tri = PlaneGraph(3, [[1, 2], [2, 0], [0, 1]], 0)
    assert dp_chromatic(tri) == 3
    path = PlaneGraph(3, [[1], [0, 2], [1]], 0)
    assert dp_chromatic(path) == 2
    with pytest.raises(TooLarge):
        dp_chromatic(tri, n_max_guard=2)
