"""Hand-encoded corpus of figure graphs.

Each entry is built here and shipped as ``data/corpus/<id>.json``; the
shipped files are what :func:`corpus` loads.  Expected outcomes live in
``data/expected.json`` and are produced by the oracles in
:mod:`dpd.oracles`, never typed in by hand.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import patterns
from .construct import Hole, from_coordinates, from_named_faces, pad
from .plane import PlaneGraph


@dataclass
class CorpusEntry:
    id: str
    graph: PlaneGraph
    labels: dict = field(default_factory=dict)
    note: str = ""
    expected: dict = field(default_factory=dict)

    def to_json(self):
        return {"id": self.id, "note": self.note, "labels": self.labels, "graph": self.graph.to_json()}


def _faces(spec, outer=0):
    """Faces from a list of space separated name strings."""
    G, ids = from_named_faces([s.split() for s in spec], outer)
    return G, ids


def _rot(p, c, deg):
    t = math.radians(deg)
    x, y = p[0] - c[0], p[1] - c[1]
    return (c[0] + x * math.cos(t) - y * math.sin(t), c[1] + x * math.sin(t) + y * math.cos(t))


def _drawing(pos, edges):
    names = list(pos)
    ix = {x: i for i, x in enumerate(names)}
    es = [(ix[a], ix[b]) for a, b in (e.split("-") for e in edges.split())]
    return from_coordinates([pos[x] for x in names], es), names


def _padded(core, names, targets=None, holes=(), floor=4):
    tg = {}
    for v in range(core.n):
        t = (targets or {}).get(names[v])
        tg[v] = t if t is not None else max(core.degree(v), floor)
    P = pad(core, tg, holes=list(holes), names=names)
    return P.graph, {k: v for k, v in P.labels.items() if k in set(names)}


# small graphs ---------------------------------------------------------------------


def _k3():
    return _faces(["a b c", "a b c"])


def _k4():
    return _faces(["a b c", "a b d", "b c d", "c a d"])


def _w5():
    return _faces(["a b c d", "h a b", "h b c", "h c d", "h d a"])


def _stacked_k4():
    # e sits inside the triangle abd, which then separates e from c
    return _faces(["a b c", "b c d", "c a d", "a b e", "b d e", "d a e"])


def _octahedron():
    return _faces(["t p q", "t q r", "t r s", "t s p", "b p q", "b q r", "b r s", "b s p"])


def _c4():
    return _faces(["a b c d", "a b c d"])


def _c6_short():
    return _faces(["v1 v2 v3 v4 v5 v6", "v2 v3 v4", "v1 v2 v4 v5 v6"])


def _c6_long():
    return _faces(["v1 v2 v3 v4 v5 v6", "v1 v2 v3 v6", "v3 v4 v5 v6"])


# clusters inside a hexagonal outer face -----------------------------------------------


HEX = "h0 h1 h2 h3 h4 h5"


def _cluster_c1():
    return _faces([HEX, "x y z", "h0 h1 h2 y x", "h2 h3 h4 z y", "h4 h5 h0 x z"])


def _cluster_c2():
    return _faces([HEX, "p q r", "q s r", "p q h2 h1 h0", "q s h3 h2", "s r h5 h4 h3", "r p h0 h5"])


def _cluster_c3():
    return _faces([HEX, "u1 u2 u3", "u1 u3 u4", "u1 u4 u5",
                   "u2 u3 h2 h1", "u3 u4 h3 h2", "u4 u5 h4 h3", "u5 u1 h5 h4", "u1 u2 h1 h0 h5"])


def _cluster_c4():
    return _faces([HEX, "o a b", "o b c", "o c d", "o d a",
                   "a b h2 h1 h0", "b c h3 h2", "c d h5 h4 h3", "d a h0 h5"])


def _fan5():
    rim = [f"r{i}" for i in range(1, 7)]
    fs = [HEX] + [f"o {rim[i]} {rim[i + 1]}" for i in range(5)]
    fs += [f"{rim[i]} {rim[i + 1]} h{i + 1} h{i}" for i in range(5)]
    fs.append("r6 o r1 h0 h5")
    return _faces(fs)


# faces around the outer face ---------------------------------------------------------------


def _fig_5_3():
    # x5 is the 2-vertex of D; the 5-face and D share the path x4 x5 x1
    return _faces(["x1 x5 x4", "x1 x2 x3 x4 x5", "x1 x2 x3 x4"])


def _fig_4_3_3():
    # D = x1 x u and the 3-face x u x3 both touch the 4-face at the 3-vertex x
    return _faces(["x1 x u", "x u x3", "x1 x x3 x4", "x1 x4 x3 u"])


# C4 clusters with attached C3 clusters ---------------------------------------------------


def _c4_core(fans):
    """C4 on hub O with rim E N W S and C3 fans hung on the named rim vertices."""
    pos = {"O": (0.0, 0.0), "E": (1.0, 0.0), "N": (0.0, 1.0), "W": (-1.0, 0.0), "S": (0.0, -1.0)}
    edges = ["O-E", "O-N", "O-W", "O-S", "E-N", "N-W", "W-S", "S-E"]
    for X in fans:
        c = (2 * pos[X][0], 2 * pos[X][1])
        pos[f"{X}O"] = c
        for k in (1, 2, 3):
            pos[f"{X}{k}"] = _rot(pos[X], c, -60 * k)
        edges += [f"{X}-{X}1", f"{X}1-{X}2", f"{X}2-{X}3",
                  f"{X}O-{X}", f"{X}O-{X}1", f"{X}O-{X}2", f"{X}O-{X}3"]
    return _drawing(pos, " ".join(edges))


def _one_cluster():
    core, names = _c4_core("E")
    return _padded(core, names)


def _two_clusters():
    core, names = _c4_core("EN")
    return _padded(core, names)


def _fig4c():
    p = patterns.get("fig4c")
    core = from_coordinates(list(p.coords), list(p.edges))
    return _padded(core, list(p.names))


def _special_c4():
    """C4 with three special 5-vertices v2, v3, v4 (v15 drawn as v7).

    The C3 fans hang on v2 (hub v8), v3 (hub v12) and v4 (hub v16) and meet
    at the 4-vertex v7.  The four faces around the C4 are 7-faces; the fan
    sides away from them are 5-faces.  Extra vertices x..t fill the region
    below v1 and r/s/t0.. the outside.
    """
    spec = [
        "t0 t1 t2",
        "O v1 v2", "O v2 v3", "O v3 v4", "O v4 v1",
        "v2 v5 v8", "v5 v6 v8", "v6 v7 v8",
        "v3 v9 v12", "v9 v10 v12", "v10 v11 v12",
        "v4 v13 v16", "v13 v14 v16", "v14 v7 v16",
        # below the C4
        "v1 v2 v8 v7 v14 x v17", "v14 v13 p m x", "v17 x m p y",
        "v17 y p v13 q t z", "v17 z t q v13 v4 v1",
        # around the outside
        "s v6 v7 v16 v4 v3 v9", "sA v5 v2 v3 v12 v11 sB",
        "v6 v5 s5 r1 s", "v10 v9 s9 r2 s10", "v11 v10 s10 r3 s11",
        "v5 sA t0 s5", "s5 t0 s r1", "s v9 s9 t1 t0", "s9 r2 s10 t1",
        "s10 r3 s11 t2 t1", "s11 v11 sB t2", "sB sA t0 t2",
    ]
    G, ids = _faces(spec)
    labels = {k: v for k, v in ids.items() if k == "O" or k.startswith("v")}
    labels["v15"] = labels["v7"]
    return G, labels


def _rc_host(pid):
    p = patterns.get(pid)
    core = from_coordinates(list(p.coords), list(p.edges))
    tg = {p.names[i]: (d if d is not None else 4) for i, d in enumerate(p.degree)}
    return _padded(core, list(p.names), tg)


def _rc1_w3w5():
    # the fan of rc1 closed up by w3w5: a C4 around w4
    core, ids = _faces(["w5 w1 w2 w3", "w4 w5 w1", "w4 w1 w2", "w4 w2 w3", "w4 w3 w5"])
    names = [None] * core.n
    for k, v in ids.items():
        names[v] = k
    return _padded(core, names, {"w2": 5})


def _theorem_small():
    # x is adjacent to a, b, c, y and y to a, b, x
    return _faces(["a b c", "b c x", "c a x", "a b y", "b x y", "x a y"])


BUILDERS = {
    "k3": (_k3, "triangle"),
    "k4": (_k4, "K4, outer face abc"),
    "w5": (_w5, "wheel on five vertices, outer 4-face"),
    "stacked-k4": (_stacked_k4, "K4 with a vertex stacked into a bounded face"),
    "octahedron": (_octahedron, "octahedron; every triangle bounds a face"),
    "c4": (_c4, "4-cycle"),
    "c6-short": (_c6_short, "6-cycle with a short chord"),
    "c6-long": (_c6_long, "6-cycle with a long chord"),
    "clusters-c1": (_cluster_c1, "one 3-face inside a hexagon"),
    "clusters-c2": (_cluster_c2, "two 3-faces on an edge inside a hexagon"),
    "clusters-c3": (_cluster_c3, "fan of three 3-faces inside a hexagon"),
    "clusters-c4": (_cluster_c4, "wheel of four 3-faces inside a hexagon"),
    "fan5": (_fan5, "fan of five 3-faces; not a cluster shape"),
    "fig-5-3": (_fig_5_3, "5-face next to the outer 3-face"),
    "fig-4-3-3": (_fig_4_3_3, "4-face next to two 3-faces at a 3-vertex"),
    "1cluster": (_one_cluster, "C4 sharing a 5-vertex with one C3; hexagonal padding"),
    "2clusters": (_two_clusters, "C4 sharing adjacent 5-vertices with two C3s; hexagonal padding"),
    "special-c4": (_special_c4, "special C4 with three special vertices, v15 = v7"),
    "fig4c": (_fig4c, "C4 with three C3 fans; hexagonal padding to degree 4"),
    "theorem-small": (_theorem_small, "outer triangle, a 4-vertex and a 3-vertex"),
    "rc1-w3w5": (_rc1_w3w5, "rc1 with the excluded edge w3w5 added"),
}
for _pid in patterns.RC_IDS:
    BUILDERS[f"{_pid}-host"] = ((lambda pid=_pid: _rc_host(pid)), f"{_pid} padded with hexagons to its marked degrees")


def build(entry_id) -> CorpusEntry:
    fn, note = BUILDERS[entry_id]
    G, labels = fn()
    return CorpusEntry(entry_id, G, dict(labels), note)


def _data():
    return resources.files("dpd") / "data"


def load_expected():
    path = _data() / "expected.json"
    if not path.is_file():
        return {}
    return json.loads(path.read_text())


def corpus():
    """Shipped corpus entries with their expected outcomes."""
    expected = load_expected()
    out = []
    for eid in BUILDERS:
        path = _data() / "corpus" / f"{eid}.json"
        data = json.loads(path.read_text())
        G = PlaneGraph.from_json(data["graph"])
        out.append(CorpusEntry(eid, G, data.get("labels", {}), data.get("note", ""), expected.get(eid, {})))
    return out


def get(entry_id) -> CorpusEntry:
    for e in corpus():
        if e.id == entry_id:
            return e
    raise KeyError(entry_id)


def write_corpus(directory):
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    for eid in BUILDERS:
        e = build(eid)
        (d / f"{eid}.json").write_text(json.dumps(e.to_json(), indent=1) + "\n")


def regenerate(root=None):
    """Rebuild ``data/corpus`` and ``data/expected.json`` under ``root``.

    Expected values come from the oracles; ``lint_failed`` is a snapshot of
    the linter's own output, kept so that changes to it show up as drift.
    """
    from . import oracles
    from .scan import failed, lint_hypotheses

    root = Path(root) if root is not None else Path(str(_data()))
    write_corpus(root / "corpus")
    expected = {}
    for eid in BUILDERS:
        G = build(eid).graph
        rec = oracles.derive_expected(G)
        rec["lint_failed"] = failed(lint_hypotheses(G))
        expected[eid] = rec
    (root / "expected.json").write_text(json.dumps(expected, indent=1, sort_keys=True) + "\n")
    return expected


if __name__ == "__main__":
    import sys

    regenerate(sys.argv[1] if len(sys.argv) > 1 else None)
