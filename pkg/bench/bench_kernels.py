"""Compiled vs pure-Python search kernel.

    python3 bench/bench_kernels.py [--repeat 1]

Times two workloads on both backends and checks they agree: ``solve`` on
random f = 1 covers of generated graphs, and an exhaustive ``product_search``
over the non-tree edge permutations of a small triangulated graph.
"""

import argparse
import time

import numpy as np

from dpd import _pycore, generator
from dpd.cover import permutations, spanning_forest
from dpd.kernel import EDGE, OptionTable

try:
    from dpd import _core
except ImportError:  # extension not built
    _core = None


def _kernel(cls, G, s, rng=None):
    edges = [tuple(e) for e in G.edges]
    k = cls(G.n, s, edges)
    perms = permutations(s)
    for e in range(len(edges)):
        k.set_matching(e, perms[int(rng.integers(len(perms)))] if rng is not None else list(range(s)))
    for v in range(G.n):
        k.set_f(v, [1] * s)
    return k, edges


def solve_workload(cls, graphs, s=4, seed=0):
    rng = np.random.default_rng(seed)
    out = []
    for G in graphs:
        k, _ = _kernel(cls, G, s, rng)
        sol = k.solve([-1] * G.n)
        out.append(None if sol is None else tuple(sol))
    return out


def product_workload(cls, G, s=4):
    k, edges = _kernel(cls, G, s)
    outer = list(G.faces[G.outer].boundary)
    _, rest = spanning_forest(G.n, edges, outer + [v for v in range(G.n) if v not in outer])
    index = {e: i for i, e in enumerate(edges)}
    t = OptionTable(s)
    for e in rest:
        t.add(EDGE, index[e], permutations(s))
    return t.product_search(k, t.size, outer)


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        res = fn()
        best = min(best, time.perf_counter() - t)
    return best, res


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=1)
    ap.add_argument("--graphs", type=int, default=200)
    args = ap.parse_args(argv)

    graphs = [G for n in range(6, 11) for G in generator.random_instances(n, 3, count=args.graphs // 5)]
    target = next(G for G in generator.random_instances(7, 5, ("outer3",), count=50)
                  if len(G.edges) - (G.n - 1) == 3)
    backends = [("python", _pycore.Kernel)]
    if _core is not None:
        backends.insert(0, ("cython", _core.Kernel))

    rows = {}
    for name, cls in backends:
        rows[name] = (timed(lambda: solve_workload(cls, graphs), args.repeat),
                      timed(lambda: product_workload(cls, target), args.repeat))
    print(f"solve: {len(graphs)} covers, n 6..10, s=4;  product_search: n={target.n}, "
          f"{24 ** 3} covers x 64 precolourings")
    print(f"{'backend':8} {'solve s':>10} {'product s':>10}")
    for name, ((ts, _), (tp, _)) in rows.items():
        print(f"{name:8} {ts:10.4f} {tp:10.4f}")
    if "cython" in rows:
        (ts_c, rs_c), (tp_c, rp_c) = rows["cython"]
        (ts_p, rs_p), (tp_p, rp_p) = rows["python"]
        print(f"speedup  {ts_p / ts_c:10.1f}x {tp_p / tp_c:9.1f}x")
        same = rs_c == rs_p and tuple(rp_c[:2]) == tuple(rp_p[:2])
        print("results agree" if same else "RESULTS DIFFER")
        return 0 if same else 1
    print("compiled core not built; only the fallback was timed")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
