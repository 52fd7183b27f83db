import pytest

from dpd import scan
from dpd.construct import from_named_faces


def faces(*spec):
    return from_named_faces([s.split() for s in spec])[0]


def test_chord_orbits(entries):
    short = scan.find_chorded_6_cycles(entries["c6-short"].graph)
    long_ = scan.find_chorded_6_cycles(entries["c6-long"].graph)
    assert len(short) == 1 and len(long_) == 1
    (c, (a, b)), = short
    assert abs(c.index(a) - c.index(b)) in (2, 4)
    (c, (a, b)), = long_
    assert abs(c.index(a) - c.index(b)) == 3


def test_plain_hexagon_has_no_chord():
    G = faces("a b c d e f", "a b c d e f")
    assert len(scan.six_cycles(G)) == 1
    assert scan.find_chorded_6_cycles(G) == []


@pytest.mark.parametrize("eid,kinds", [
    ("clusters-c1", ["C1"]),
    ("clusters-c2", ["C2"]),
    ("clusters-c3", ["C3"]),
    ("clusters-c4", ["C4"]),
    ("1cluster", ["C3", "C4"]),
    ("2clusters", ["C3", "C3", "C4"]),
])
def test_cluster_kinds(entries, eid, kinds):
    cl = scan.clusters(entries[eid].graph)
    assert sorted(c.kind for c in cl) == kinds


def test_c4_labels(entries):
    c, = scan.clusters(entries["clusters-c4"].graph)
    G = entries["clusters-c4"].graph
    hub = c.u(1)
    rim = [c.u(i) for i in range(2, 6)]
    assert G.degree(hub) == 4 and set(G.neighbors(hub)) == set(rim)
    for i in range(4):
        assert G.has_edge(rim[i], rim[(i + 1) % 4])
    labs = scan.c4_labelings(c)
    assert len(labs) == 8 and len({tuple(sorted(x.items())) for x in labs}) == 8


def test_unclassifiable_cluster(entries):
    with pytest.raises(scan.UnclassifiableCluster):
        scan.clusters(entries["fan5"].graph)
    good, bad = scan.clusters(entries["fan5"].graph, strict=False)
    assert good == [] and len(bad) == 1 and len(bad[0].faces) == 5


def test_lint_k4_fails_st3(entries):
    rep = scan.lint_hypotheses(entries["k4"].graph)
    assert not rep["ST(iii)"]["ok"]
    assert set(rep) == set(scan.FULL_TIER)


def test_lint_theorem_tier(entries):
    rep = scan.lint_hypotheses(entries["theorem-small"].graph, "theorem")
    assert list(rep) == list(scan.THEOREM_TIER) and scan.lint_ok(rep)
    assert scan.failed(scan.lint_hypotheses(entries["c4"].graph, "theorem")) == ["outer3"]


def test_lint_never_raises_on_odd_graphs():
    G = faces("a b c d", "a b c d")
    rep = scan.lint_hypotheses(G)
    assert all(isinstance(r["ok"], bool) for r in rep.values())


def test_lint_nonseparating(entries):
    assert not scan.lint_hypotheses(entries["stacked-k4"].graph)["NS"]["ok"]
    assert scan.lint_hypotheses(entries["octahedron"].graph)["NS"]["ok"]
