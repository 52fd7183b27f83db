import pytest

from dpd import patterns
from dpd.corpus import build
from dpd.oracles import automorphism_count


def test_library_contents():
    for pid in patterns.RC_IDS + patterns.FORBIDDEN_IDS + ("k4", "diamond"):
        p = patterns.get(pid)
        assert p.size == len(p.names)
        assert all(0 <= a < p.size and 0 <= b < p.size for a, b in p.edges)
    with pytest.raises(patterns.UnknownPattern):
        patterns.get("nope")


@pytest.mark.parametrize("pid", list(patterns.LIBRARY))
def test_automorphisms_match_oracle(pid):
    p = patterns.get(pid)
    assert len(p.automorphisms) == automorphism_count(p)


def test_fig4c_single_match(entries):
    ms = patterns.find_pattern(entries["fig4c"].graph, "fig4c")
    assert len(ms) == 1
    assert set(ms[0].vertex_map) == set(patterns.get("fig4c").names)


def test_rc1_host_single_match(entries):
    ms = patterns.find_pattern(entries["rc1-host"].graph, "rc1")
    assert len(ms) == 1


def test_rc1_excluded_edge_kills_match(entries):
    assert patterns.find_pattern(entries["rc1-w3w5"].graph, "rc1") == []


def test_k4_in_k4(entries):
    assert len(patterns.find_pattern(entries["k4"].graph, "k4")) == 1


def test_match_json(entries):
    m = patterns.find_pattern(entries["rc1-host"].graph, "rc1")[0].to_json()
    assert m["pattern_id"] == "rc1" and len(m["vertex_map"]) == patterns.get("rc1").size


def test_rc_hosts_contain_their_pattern():
    for pid in patterns.RC_IDS:
        G = build(f"{pid}-host").graph
        assert patterns.find_pattern(G, pid), pid
