"""End-to-end checks on small graphs.

``verify_theorem`` takes a graph with an outer triangle abc and checks that
every strictly f-degenerate precolouring of a, b, c extends, over gauge
fixed covers (identity on a spanning tree) and the two weight families.
``fuzz_conjecture`` samples covers of random chorded-6-cycle-free graphs
and looks for one with no DP-colouring.  Failures come back as witness
records that :func:`replay_witness` re-checks from scratch.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .cover import Cover, WeightFn, extend_transversal, is_strictly_f_degenerate, permutations, spanning_forest
from .generator import random_instances
from .kernel import EDGE, VERTEX, Kernel, OptionTable
from .plane import PlaneGraph
from .reduce import BOUNDARY_F

EXHAUSTIVE_EDGES = 3


class TheoremError(ValueError):
    pass


def _setup(G, s, roots=None):
    edges = [tuple(e) for e in G.edges]
    tree, rest = spanning_forest(G.n, edges, roots)
    index = {e: i for i, e in enumerate(edges)}
    k = Kernel(G.n, s, edges)
    ident = list(range(s))
    for e in range(len(edges)):
        k.set_matching(e, ident)
    return edges, tree, rest, index, k


def _table(s, rest, index, n, family):
    t = OptionTable(s)
    perms = permutations(s)
    for e in rest:
        t.add(EDGE, index[e], perms)
    if family == "boundary":
        for v in range(n):
            t.add(VERTEX, v, BOUNDARY_F)
    return t


def _rows(table, rng, count):
    return np.stack([rng.integers(0, c, size=count) for c in table.counts], axis=1).astype(np.intc)


def _cover_of(table, digits, n, s, edges):
    maps = {e: list(range(s)) for e in range(len(edges))}
    f = [[1] * s for _ in range(n)]
    for t, d in enumerate(digits):
        opt = table.options[t][int(d)]
        if table.kinds[t] == EDGE:
            maps[table.vars[t]] = opt
        else:
            f[table.vars[t]] = list(opt)
    ms = {edges[e]: [(i, j) for i, j in enumerate(mp) if j >= 0] for e, mp in maps.items()}
    return Cover.build(n, s, ms, edges), WeightFn.of(f)


def _run(k, table, rng, samples, exhaustive, pre):
    """(mode, checked, total, failing digits, failing precolouring)."""
    total = table.size
    if exhaustive:
        checked, fail, bad = table.product_search(k, total, pre)
        return "exhaustive", checked, total, (table.digits(fail) if fail >= 0 else None), bad
    rows = _rows(table, rng, samples)
    checked, fail, bad = table.batch_search(k, rows, pre)
    return "sampled", checked, samples, ([int(x) for x in rows[fail]] if fail >= 0 else None), bad


def verify_theorem(G, seed, s=4, samples=2000, families=("ones", "boundary")):
    """Check that every strictly f-degenerate precolouring of D extends.

    Covers are exhaustive when at most ``EXHAUSTIVE_EDGES`` edges lie off
    the spanning tree and the family is f ones; otherwise ``samples``
    seeded draws.
    """
    if G.faces[G.outer].degree != 3:
        raise TheoremError("the outer face must be a triangle")
    outer = list(G.faces[G.outer].boundary)
    edges, tree, rest, index, k = _setup(G, s, outer + [v for v in range(G.n) if v not in outer])
    rng = np.random.default_rng(seed)
    report = {"ok": True, "n": G.n, "m": len(edges), "outer": outer,
              "tree_edges": len(tree), "nontree_edges": len(rest), "families": {}}
    for fam in families:
        table = _table(s, rest, index, G.n, fam)
        ident_f = [1] * s
        for v in range(G.n):
            k.set_f(v, ident_f)
        exhaustive = fam == "ones" and len(rest) <= EXHAUSTIVE_EDGES
        mode, checked, total, digits, bad = _run(k, table, rng, samples, exhaustive, outer)
        report["families"][fam] = {"mode": mode, "checked": checked, "total": total}
        if digits is not None:
            cover, f = _cover_of(table, digits, G.n, s, edges)
            partial = [-1] * G.n
            for v, c in zip(outer, bad):
                partial[v] = int(c)
            report["ok"] = False
            report["witness"] = witness("theorem", G, cover, f, partial)
            break
    return report


def fuzz_conjecture(count=1000, n=10, seed=0, s=4, samples=256, filters=("chorded6",), witness_dir=None):
    """Sample covers of random filtered graphs looking for a non-colourable one."""
    report = {"ok": True, "instances": 0, "covers": 0, "n": n, "seed": seed, "s": s,
              "samples": samples, "filters": list(filters), "failures": []}
    for i, G in enumerate(random_instances(n, seed, filters, count=count)):
        edges, tree, rest, index, k = _setup(G, s)
        table = _table(s, rest, index, G.n, "ones")
        rng = np.random.default_rng([seed, i, 1])
        _, checked, _, digits, _ = _run(k, table, rng, samples, table.size <= samples, [])
        report["instances"] += 1
        report["covers"] += checked
        if digits is not None:
            cover, f = _cover_of(table, digits, G.n, s, edges)
            w = witness("conjecture", G, cover, f, None)
            w["index"] = i
            report["ok"] = False
            report["failures"].append(w)
            if witness_dir is not None:
                write_witness(w, Path(witness_dir) / f"conjecture-{seed}-{i}.json")
    return report


def witness(kind, G, cover, f, partial):
    pre = None
    if partial is not None:
        pre = [[v, c + 1] for v, c in enumerate(partial) if c >= 0]
    return {"kind": kind, "verdict": "COUNTEREXAMPLE", "graph": G.to_json(),
            "cover": cover.to_json(f), "precolored": pre}


def write_witness(w, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(w, indent=1) + "\n")
    return path


def replay_witness(w):
    """COUNTEREXAMPLE if the recorded cover still fails to extend, else EXTENDS."""
    if isinstance(w, (str, bytes)):
        w = json.loads(w)
    G = PlaneGraph.from_json(w["graph"])
    cover, f = Cover.from_json(w["cover"], n=G.n, edges=[tuple(e) for e in G.edges])
    partial = [-1] * G.n
    for v, c in w.get("precolored") or []:
        partial[int(v)] = int(c) - 1
    if not is_strictly_f_degenerate(cover, f, partial):
        raise TheoremError("the recorded precolouring is not strictly f-degenerate")
    return "COUNTEREXAMPLE" if extend_transversal(cover, f, partial) is None else "EXTENDS"
