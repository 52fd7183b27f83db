import json

import pytest

from dpd import corpus, oracles, patterns, scan
from dpd.plane import PlaneGraph, separating_3_cycles


def test_size_and_ids(entries):
    assert len(entries) >= 18
    for need in ["clusters-c1", "clusters-c4", "fig-5-3", "fig-4-3-3", "1cluster", "2clusters",
                 "special-c4", "fig4c"] + [f"{p}-host" for p in patterns.RC_IDS]:
        assert need in entries


def test_round_trip(entries):
    for e in entries.values():
        G = PlaneGraph.from_json(json.loads(json.dumps(e.graph.to_json())))
        assert G.rotations == e.graph.rotations and G.outer == e.graph.outer


def test_shipped_files_match_builders(entries):
    for eid, e in entries.items():
        b = corpus.build(eid)
        assert b.graph.to_json() == e.graph.to_json(), eid
        assert b.labels == e.labels


def test_expected_not_drifted(tmp_path):
    """Regenerating from the oracles reproduces the shipped expectations."""
    fresh = corpus.regenerate(tmp_path)
    assert fresh == corpus.load_expected()
    for eid in corpus.BUILDERS:
        assert (tmp_path / "corpus" / f"{eid}.json").read_text() == json.dumps(
            corpus.build(eid).to_json(), indent=1) + "\n"


def test_detectors_agree_with_expected(entries):
    for eid, e in entries.items():
        G, exp = e.graph, e.expected
        assert len(scan.find_chorded_6_cycles(G)) == exp["chorded_6_cycles"], eid
        assert [list(t) for t, _, _ in separating_3_cycles(G)] == exp["separating_triangles"], eid
        good, bad = scan.clusters(G, strict=False)
        kinds = sorted([c.kind for c in good] + ["unclassifiable"] * len(bad))
        assert kinds == exp["cluster_kinds"], eid
        for pid in patterns.LIBRARY:
            assert len(patterns.find_pattern(G, pid)) == exp["patterns"].get(pid, 0), (eid, pid)
        assert scan.failed(scan.lint_hypotheses(G)) == exp["lint_failed"], eid


def test_documented_examples(entries):
    assert [c.kind for c in scan.clusters(entries["clusters-c4"].graph)] == ["C4"]
    assert entries["fig4c"].expected["patterns"]["fig4c"] == 1
    assert entries["c4"].expected["dp_chromatic"] == 3
    assert entries["k4"].expected["dp_chromatic"] == 4
    assert entries["stacked-k4"].expected["separating_triangles"]


def test_labels_point_at_vertices(entries):
    e = entries["special-c4"]
    assert e.labels["v15"] == e.labels["v7"]
    G = e.graph
    assert G.degree(e.labels["O"]) == 4
    for name in ("v2", "v3", "v4"):
        assert G.degree(e.labels[name]) == 5


def test_get_unknown():
    with pytest.raises(KeyError):
        corpus.get("nope")
    assert corpus.get("k3").graph.n == 3


def test_oracle_method_switches_agree(entries):
    G = entries["clusters-c3"].graph
    assert oracles.chorded_6_cycles(G, "subsets") == oracles.chorded_6_cycles(G, "nx")
    p = patterns.get("rc1")
    H = entries["rc1-host"].graph
    assert sorted(oracles.pattern_maps(p, H, "product")) == sorted(oracles.pattern_maps(p, H, "vf2"))
