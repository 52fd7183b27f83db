import numpy as np
import pytest

from dpd import _pycore
from dpd.kernel import BACKEND, EDGE, VERTEX, Kernel, OptionTable

compiled = pytest.importorskip("dpd._core")


def random_instance(rng, n=6, s=3):
    edges = sorted({tuple(sorted(rng.choice(n, 2, replace=False))) for _ in range(9)})
    maps = [list(rng.permutation(s)) for _ in edges]
    f = [list(rng.integers(0, 3, size=s)) for _ in range(n)]
    return n, s, [tuple(map(int, e)) for e in edges], maps, f


def load(cls, n, s, edges, maps, f):
    k = cls(n, s, edges)
    for e, m in enumerate(maps):
        k.set_matching(e, [int(x) for x in m])
    for v, row in enumerate(f):
        k.set_f(v, [int(x) for x in row])
    return k


def test_backend_selected():
    assert BACKEND in ("cython", "python")
    assert Kernel.backend == BACKEND


def test_backends_agree_on_solve():
    rng = np.random.default_rng(11)
    for _ in range(300):
        inst = random_instance(rng)
        a = load(compiled.Kernel, *inst).solve()
        b = load(_pycore.Kernel, *inst).solve()
        assert a == b


def test_backends_agree_on_product_search():
    rng = np.random.default_rng(3)
    n, s, edges, maps, f = random_instance(rng, n=5, s=3)
    t = OptionTable(s)
    perms = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1]]
    for e in range(min(3, len(edges))):
        t.add(EDGE, e, perms)
    t.add(VERTEX, 0, [[1, 1, 1], [1, 0, 0], [0, 0, 1]])
    out = []
    for cls in (compiled.Kernel, _pycore.Kernel):
        k = load(cls, n, s, edges, maps, f)
        out.append(tuple(t.product_search(k, t.size, [0, 1])[:2]))
    assert out[0] == out[1]


def test_option_table_checks():
    t = OptionTable(3)
    with pytest.raises(ValueError):
        t.add(EDGE, 0, [])
    with pytest.raises(ValueError):
        t.add(EDGE, 0, [[0, 1]])
    t.add(EDGE, 0, [[0, 1, 2]] * 4)
    t.add(VERTEX, 1, [[1, 1, 1]] * 3)
    assert t.size == 12
    assert t.digits(7) == [3, 1]
