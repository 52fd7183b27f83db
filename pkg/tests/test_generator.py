import warnings

import pytest

from dpd import generator as gen
from dpd.scan import find_chorded_6_cycles


def test_deterministic():
    a = [G.to_json() for G in gen.random_instances(9, 42, "chorded6", count=25)]
    b = [G.to_json() for G in gen.random_instances(9, 42, "chorded6", count=25)]
    c = [G.to_json() for G in gen.random_instances(9, 43, "chorded6", count=25)]
    assert a == b and a != c


def test_index_partitioning():
    whole = [gen.attempt(8, 5, i).to_json() for i in range(10)]
    part = [gen.attempt(8, 5, i).to_json() for i in range(5, 10)]
    assert whole[5:] == part


def test_small_n_passes_trivially():
    for G in gen.random_instances(4, 1, "chorded6", count=20):
        assert G.n == 4 and not find_chorded_6_cycles(G)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 12])
def test_sizes_and_euler(n):
    for G in gen.random_instances(n, 7, (), count=10):
        assert G.n == n
        assert G.n - len(G.edges) + len(G.faces) == 2


def test_filters_hold():
    for G in gen.random_instances(10, 3, "chorded6,outer3", count=40):
        assert G.faces[G.outer].degree == 3
        assert not find_chorded_6_cycles(G)
    for G in gen.random_instances(11, 3, ["fig4"], count=10):
        assert gen.passes(G, ("fig4",))


def test_bad_arguments():
    with pytest.raises(ValueError):
        next(gen.random_instances(13, 1))
    with pytest.raises(ValueError):
        next(gen.random_instances(5, None))
    with pytest.raises(ValueError):
        gen.parse_filters("chorded6,bogus")


def test_filter_too_strict_warns(monkeypatch):
    monkeypatch.setitem(gen.FILTERS, "outer3", lambda G: False)
    with pytest.warns(gen.FilterTooStrict):
        out = list(gen.random_instances(5, 1, "outer3", count=3, window=50))
    assert out == []


def test_no_warning_when_filters_pass():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert len(list(gen.random_instances(6, 1, "outer3", count=30, window=10))) == 30
