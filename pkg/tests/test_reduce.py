import json

import pytest

from dpd.cover import Cover, WeightFn
from dpd.reduce import (ConditionsNotChecked, ConfigModel, NotInduced, OrderNotBijective, ReduceError,
                        build_instance, check_ww_conditions, compare_paired, decrements, f_family,
                        find_order, paired_extension, reducible_oracle, replay)
from dpd.corpus import build

W = lambda *ix: [f"w{i}" for i in ix]  # noqa: E731

RC7B = [
    ("rc7b", W(*range(1, 12)), [W(1, 11), W(2, 9), W(3, 7)]),
    ("rc7b_w2", W(2, 9, 8, 7, 3, 4, 6, 5, 10, 1, 11), [W(2, 11)]),
    ("rc7b_w9", W(6, 4, 5, 11, 2, 7, 8, 9, 10, 1, 3), [W(6, 3), W(11, 1), W(2, 9)]),
]


@pytest.mark.parametrize("pid,order,pairs", RC7B)
def test_rc7b_orderings(pid, order, pairs):
    r = check_ww_conditions(ConfigModel.from_pattern(pid), order, pairs)
    assert r.ok, r.violation
    bad = check_ww_conditions(ConfigModel.from_pattern(pid, {order[-1]: 5}), order, pairs)
    assert not bad.ok and bad.violation[0] == "ii"


def test_order_must_be_bijective():
    m = ConfigModel.from_pattern("rc1")
    with pytest.raises(OrderNotBijective):
        check_ww_conditions(m, W(1, 2, 3, 4))
    with pytest.raises(OrderNotBijective):
        check_ww_conditions(m, W(1, 2, 3, 4, 9))


def test_condition_three_reported():
    m = ConfigModel(("a", "b", "c"), ((0, 1), (0, 2), (1, 2)), (6, 3, 4))
    r = check_ww_conditions(m, ["a", "b", "c"], [("b", "c")])
    assert not r.ok and r.violation[0] == "iii" and r.violation[1] == "a"


def test_from_host_requires_induced(entries):
    G = entries["k4"].graph
    m = ConfigModel.from_host(G, [0, 1, 2])
    assert len(m.edges) == 3
    with pytest.raises(NotInduced):
        ConfigModel.from_host(G, [0, 1, 2], edges=[(0, 1), (1, 2)])


def test_find_order_rc1():
    r = find_order(ConfigModel.from_pattern("rc1"))
    assert r is not None and r.ok


def test_decrements():
    assert decrements((1, 1, 1, 1), 1) == [(0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 0)]
    assert decrements((2, 2, 0, 0), 5) == [(0, 0, 0, 0)]
    assert len(f_family("boundary")) == 19
    with pytest.raises(ReduceError):
        f_family("boundary", s=3)
    with pytest.raises(ReduceError):
        f_family("weird")


def test_rc1_reducible_exhaustive():
    v = reducible_oracle("rc1")
    assert v.verdict == "REDUCIBLE" and v.mode == "exhaustive" and v.checked == v.total


def test_rc1_with_extra_edge_still_reducible():
    assert reducible_oracle("rc1", extra_edges=[("w3", "w5")]).verdict == "REDUCIBLE"


def test_sampling_needs_seed_and_budget():
    with pytest.raises(ReduceError):
        reducible_oracle("rc3a", mode="sampled")
    v = reducible_oracle("rc3a", mode="sampled", samples=200, seed=1)
    assert v.verdict == "REDUCIBLE" and v.checked == 200
    assert reducible_oracle("rc1", mode="literal", budget=10).verdict == "EXHAUSTED"


def test_counterexample_witness_replays(tmp_path):
    v = reducible_oracle("rc1", s=3)
    assert v.verdict == "COUNTEREXAMPLE"
    p = tmp_path / "w.json"
    p.write_text(json.dumps(v.witness))
    assert replay(p.read_text()) == "COUNTEREXAMPLE"


def test_reduced_and_literal_agree_on_small_models():
    tri = ConfigModel(("a", "b", "c"), ((0, 1), (0, 2), (1, 2)), (4, 4, 5))
    path = ConfigModel(("a", "b", "c"), ((0, 1), (1, 2)), (4, 5, 4))
    for m in (tri, path):
        for s in (3, 4):
            a = reducible_oracle(m, s=s, budget=10**7, mode="exhaustive").verdict
            b = reducible_oracle(m, s=s, budget=10**7, mode="literal").verdict
            assert a == b, (m, s)


def test_boundary_family_sampled():
    v = reducible_oracle("rc1", f="boundary", budget=1000, seed=4)
    assert v.mode == "sampled" and v.verdict == "REDUCIBLE"


def test_reduced_mode_rejects_other_f():
    with pytest.raises(ReduceError):
        build_instance("rc1", f="boundary", mode="reduced")


def test_paired_extension_needs_checked_order():
    m = ConfigModel.from_pattern("rc1")
    cover = Cover.identity(m.m, 4, list(m.edges))
    with pytest.raises(ConditionsNotChecked):
        paired_extension(cover, WeightFn.ones(m.m, 4), None)
    bad = check_ww_conditions(m, W(1, 2, 3, 4, 5), [W(1, 2)])
    if not bad.ok:
        with pytest.raises(ConditionsNotChecked):
            paired_extension(cover, WeightFn.ones(m.m, 4), bad)


def test_paired_extension_agrees():
    ww = find_order(ConfigModel.from_pattern("rc2a"))
    st = compare_paired("rc2a", ww, samples=200, seed=1)
    assert st["disagree"] == 0 and st["instances"] == 200


def test_host_rc1_model(entries):
    from dpd.patterns import find_pattern

    G = build("rc1-host").graph
    m, = find_pattern(G, "rc1")
    names = [n for n in m.vertex_map if n.startswith("w")]
    model = ConfigModel.from_host(G, [m.vertex_map[n] for n in names], names=names)
    assert reducible_oracle(model).verdict == "REDUCIBLE"
