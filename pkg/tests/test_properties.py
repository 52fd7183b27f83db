import itertools
import json

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from dpd import generator, oracles, patterns, scan
from dpd.cover import Cover, WeightFn, extend_transversal, is_strictly_f_degenerate, make_kernel
from dpd.plane import PlaneGraph, separating_3_cycles

FAST = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def graphs(draw, lo=3, hi=9):
    n = draw(st.integers(lo, hi))
    return generator.attempt(n, draw(st.integers(0, 2**32)), draw(st.integers(0, 1000)))


@st.composite
def covers(draw, max_n=6, max_s=3):
    n = draw(st.integers(1, max_n))
    s = draw(st.integers(1, max_s))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    ms = {}
    for e in edges:
        perm = draw(st.permutations(range(s)))
        keep = draw(st.lists(st.booleans(), min_size=s, max_size=s))
        ms[e] = [(i, perm[i]) for i in range(s) if keep[i]]
    cover = Cover.build(n, s, ms, edges)
    f = WeightFn.of(draw(st.lists(st.lists(st.integers(0, 2), min_size=s, max_size=s), min_size=n, max_size=n)))
    T = draw(st.lists(st.integers(-1, s - 1), min_size=n, max_size=n))
    return cover, f, T


@FAST
@given(graphs())
def test_graph_json_round_trip(G):
    H = PlaneGraph.from_json(json.dumps(G.to_json()))
    assert H.to_json() == G.to_json()
    assert G.n - len(G.edges) + len(G.faces) == 2


@FAST
@given(graphs(lo=6, hi=10))
def test_chorded_cycles_match_oracle(G):
    assert sorted(scan.find_chorded_6_cycles(G)) == oracles.chorded_6_cycles(G)


@FAST
@given(graphs())
def test_separating_triangles_match_oracle(G):
    assert sorted(t for t, _, _ in separating_3_cycles(G)) == oracles.separating_triangles(G)


@FAST
@given(graphs(lo=4, hi=9), st.sampled_from(["k4", "diamond", "rc1", "fig4a", "fig4b"]))
def test_pattern_counts_match_oracle(G, pid):
    assert len(patterns.find_pattern(G, pid)) == oracles.pattern_count(G, pid)


@FAST
@given(covers())
def test_sfd_matches_subsets(data):
    cover, f, T = data
    assert is_strictly_f_degenerate(cover, f, T) == oracles.sfd_by_subsets(cover, f, T)


@FAST
@given(covers(max_n=5, max_s=3))
def test_extend_is_sound_and_complete(data):
    cover, f, T = data
    partial = [c if i % 2 else -1 for i, c in enumerate(T)]
    if not is_strictly_f_degenerate(cover, f, partial):
        return
    got = extend_transversal(cover, f, partial)
    free = [v for v in range(cover.n) if partial[v] < 0]
    brute = None
    for cols in itertools.product(range(cover.s), repeat=len(free)):
        full = list(partial)
        for v, c in zip(free, cols):
            full[v] = c
        if is_strictly_f_degenerate(cover, f, full):
            brute = full
            break
    assert (got is None) == (brute is None)
    if got is not None:
        assert all(got[v] == partial[v] for v in range(cover.n) if partial[v] >= 0)
        assert is_strictly_f_degenerate(cover, f, got)


@FAST
@given(covers())
def test_cover_json_round_trip(data):
    cover, f, _ = data
    c2, f2 = Cover.from_json(json.dumps(cover.to_json(f)), n=cover.n, edges=list(cover.edges))
    assert c2 == cover and f2 == f


@FAST
@given(covers(max_n=5))
def test_kernel_sfd_matches(data):
    cover, f, T = data
    assert make_kernel(cover, f).is_sfd(list(T)) == is_strictly_f_degenerate(cover, f, T)


@FAST
@given(graphs(lo=5, hi=10))
def test_cluster_kinds_match_oracle(G):
    good, bad = scan.clusters(G, strict=False)
    assert sorted([c.kind for c in good] + ["unclassifiable"] * len(bad)) == oracles.cluster_kinds(G)
