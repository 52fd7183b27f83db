"""Configuration library and a backtracking matcher.

A pattern is a small labelled graph.  Marked vertices carry an exact degree
in the host (4 or 5); hollow vertices carry none and are not part of the
configuration K used for reducibility.  Side conditions are required
non-edges and neighbourhood-size constraints of the form
``|N(w) ∩ S| = c``.  Matches are injective maps that send pattern edges to
host edges, deduplicated modulo the pattern's automorphism group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property


class UnknownPattern(KeyError):
    pass


@dataclass(frozen=True)
class Pattern:
    id: str
    names: tuple
    edges: tuple
    degree: tuple
    nonedges: tuple = ()
    counts: tuple = ()
    internal: bool = False
    coords: tuple = None
    note: str = ""

    @property
    def size(self) -> int:
        return len(self.names)

    def index(self, name) -> int:
        return self.names.index(name)

    @cached_property
    def adj(self):
        out = [set() for _ in self.names]
        for a, b in self.edges:
            out[a].add(b)
            out[b].add(a)
        return tuple(frozenset(s) for s in out)

    @property
    def marked(self):
        """Indices of vertices with a degree mark; these form K."""
        return tuple(i for i, d in enumerate(self.degree) if d is not None)

    @cached_property
    def k_edges(self):
        m = set(self.marked)
        return tuple(e for e in self.edges if e[0] in m and e[1] in m)

    @cached_property
    def order(self):
        """Matching order: most constrained first, then breadth-first."""
        start = max(
            range(self.size),
            key=lambda i: (self.degree[i] is not None, len(self.adj[i]), self.degree[i] or 0, -i),
        )
        seen = [start]
        for x in seen:
            for y in sorted(self.adj[x], key=lambda y: (-len(self.adj[y]), y)):
                if y not in seen:
                    seen.append(y)
        for i in range(self.size):
            if i not in seen:
                seen.append(i)
        return tuple(seen)

    @cached_property
    def automorphisms(self):
        """Permutations preserving edges, marks and every side condition."""
        out = []
        nonedges = {frozenset(e) for e in self.nonedges}
        counts = {(v, frozenset(S), c) for v, S, c in self.counts}
        n = self.size

        def rec(i, perm, used):
            if i == n:
                if {frozenset((perm[a], perm[b])) for a, b in self.nonedges} != nonedges:
                    return
                if {(perm[v], frozenset(perm[x] for x in S), c) for v, S, c in self.counts} != counts:
                    return
                out.append(tuple(perm))
                return
            for j in range(n):
                if j in used or self.degree[j] != self.degree[i]:
                    continue
                if len(self.adj[j]) != len(self.adj[i]):
                    continue
                if any((perm[a] in self.adj[j]) != (a in self.adj[i]) for a in range(i)):
                    continue
                perm.append(j)
                used.add(j)
                rec(i + 1, perm, used)
                perm.pop()
                used.discard(j)

        rec(0, [], set())
        return tuple(out)

    def canonical(self, images):
        """Representative of a match modulo automorphisms."""
        return min(tuple(images[p[i]] for i in range(self.size)) for p in self.automorphisms)

    def to_json(self):
        return {
            "id": self.id,
            "names": list(self.names),
            "edges": [[self.names[a], self.names[b]] for a, b in self.edges],
            "degree": {self.names[i]: d for i, d in enumerate(self.degree) if d is not None},
            "nonedges": [[self.names[a], self.names[b]] for a, b in self.nonedges],
            "counts": [
                {"vertex": self.names[v], "set": [self.names[x] for x in sorted(S)], "size": c}
                for v, S, c in self.counts
            ],
            "internal": self.internal,
        }


@dataclass(frozen=True)
class PatternMatch:
    pattern_id: str
    vertex_map: dict
    side_conditions_checked: list = field(default_factory=list)

    def to_json(self):
        return {
            "pattern_id": self.pattern_id,
            "vertex_map": dict(self.vertex_map),
            "side_conditions_checked": [[c, bool(ok)] for c, ok in self.side_conditions_checked],
        }


# library ------------------------------------------------------------------------


def _polar(deg, r=1.3, at=(0.0, 0.0)):
    return (at[0] + r * math.cos(math.radians(deg)), at[1] + r * math.sin(math.radians(deg)))


def _make(pid, pos, edges, pents=(), hollow=(), nonedges=(), counts=(), internal=True, note="", draw=True):
    """``pos`` maps vertex name -> drawing coordinate (insertion order = index)."""
    names = tuple(pos)
    ix = {x: i for i, x in enumerate(names)}
    es = []
    for e in edges.split():
        a, b = e.split("-")
        es.append((ix[a], ix[b]))
    deg = tuple(None if x in hollow else (5 if x in pents else 4) for x in names)
    ne = tuple((ix[a], ix[b]) for a, b in (e.split("-") for e in nonedges))
    cs = tuple((ix[v], frozenset(ix[x] for x in S), c) for v, S, c in counts)
    coords = tuple(pos[x] for x in names) if draw else None
    return Pattern(pid, names, tuple(es), deg, ne, cs, internal, coords, note)


def _fan(hub, rim):
    pos = {hub: (0.0, 0.0)}
    for name, ang in zip(rim, (0, 60, 120, 180)):
        pos[name] = _polar(ang)
    edges = " ".join([f"{hub}-{r}" for r in rim] + [f"{a}-{b}" for a, b in zip(rim, rim[1:])])
    return pos, edges


def _side(anchor, offsets, mirror):
    out = []
    for deg, r in offsets:
        x, y = _polar(deg, r)
        out.append((anchor[0] - x, anchor[1] + y) if mirror else (anchor[0] + x, anchor[1] + y))
    return out


_R = 1.3
_KITE = [(45, _R), (0, 0.707 * _R), (-45, _R)]
_DART = [(45, _R), (0, 1.414 * _R), (0, 0.707 * _R)]
_WHEEL = [(45, _R), (0, 1.414 * _R), (0, 0.707 * _R), (-45, _R)]


def _attach(pos, anchor, shape, names, mirror=False):
    for name, xy in zip(names, _side(pos[anchor], shape, mirror)):
        pos[name] = xy


def _ws(a, b):
    return [f"w{i}" for i in range(a, b + 1)]


def _library():
    lib = {}

    def add(p):
        lib[p.id] = p

    hexa = {f"v{i}": _polar(60 * i, 1.0) for i in range(1, 7)}
    add(_make("fig4a", hexa, "v1-v2 v2-v3 v3-v4 v4-v5 v5-v6 v6-v1 v2-v4",
              hollow=tuple(hexa), internal=False, note="6-cycle with a short chord"))
    add(_make("fig4b", hexa, "v1-v2 v2-v3 v3-v4 v4-v5 v5-v6 v6-v1 v3-v6",
              hollow=tuple(hexa), internal=False, note="6-cycle with a long chord"))

    # C4 hub O with rim E N W S; fans on E, N, W with centres XO and rims X X1 X2 X3
    pos = {"O": (0.0, 0.0), "E": (1.0, 0.0), "N": (0.0, 1.0), "W": (-1.0, 0.0), "S": (0.0, -1.0)}
    edges = ["O-E", "O-N", "O-W", "O-S", "E-N", "N-W", "W-S", "S-E"]
    for X, (dx, dy) in (("E", (1, 0)), ("N", (0, 1)), ("W", (-1, 0))):
        c = (2.0 * dx, 2.0 * dy)
        pos[f"{X}O"] = c
        vx, vy = pos[X][0] - c[0], pos[X][1] - c[1]
        for k, ang in ((1, -60), (2, -120), (3, -180)):
            t = math.radians(ang)
            pos[f"{X}{k}"] = (c[0] + vx * math.cos(t) - vy * math.sin(t), c[1] + vx * math.sin(t) + vy * math.cos(t))
        edges += [f"{X}-{X}1", f"{X}1-{X}2", f"{X}2-{X}3", f"{X}O-{X}", f"{X}O-{X}1", f"{X}O-{X}2", f"{X}O-{X}3"]
    add(_make("fig4c", pos, " ".join(edges), hollow=tuple(pos), internal=False,
              note="C4 cluster with three fans attached at three rim vertices"))

    k4 = {"a": (0.0, 0.0), "b": _polar(90, 1.0), "c": _polar(210, 1.0), "d": _polar(330, 1.0)}
    add(_make("k4", k4, "a-b a-c a-d b-c b-d c-d", hollow=tuple(k4), internal=False))
    dia = {"a": (0.0, 1.0), "b": (-1.0, 0.0), "c": (1.0, 0.0), "d": (0.0, -1.0)}
    add(_make("diamond", dia, "a-b a-c b-c b-d c-d", note="internal 4-regular K4 minus an edge"))

    pos, e = _fan("w4", ["w5", "w1", "w2", "w3"])
    add(_make("rc1", pos, e, pents=("w2",), nonedges=("w2-w5", "w3-w5")))

    a = {"w3": (0.0, 0.0), "w2": (1.0, 1.0), "w1": (-1.0, 1.0), "w6": (-1.0, -1.0),
         "w4": (1.0, -1.0), "w7": (-2.0, 0.0), "w5": (2.0, 0.0)}
    c7 = (("w7", _ws(1, 6), 2),)
    add(_make("rc2a", {k: a[k] for k in _ws(1, 7)},
              "w2-w3 w3-w6 w6-w7 w7-w1 w1-w3 w3-w4 w4-w5 w5-w2 w1-w6 w2-w4",
              pents=("w3",), nonedges=("w3-w5",), counts=c7))
    b = {"w3": (1.0, 1.0), "w4": (0.0, 0.0), "w6": (-1.0, -1.0), "w7": (-2.0, 0.0),
         "w1": (-1.0, 1.0), "w5": (1.0, -1.0), "w2": (2.0, 0.0)}
    add(_make("rc2b", {k: b[k] for k in _ws(1, 7)},
              "w3-w4 w4-w6 w6-w7 w7-w1 w1-w4 w4-w5 w5-w2 w2-w3 w1-w6 w4-w2",
              pents=("w4",), nonedges=("w3-w5",), counts=c7))

    c8 = (("w8", _ws(1, 7), 2),)
    rc3 = {
        "rc3a": ("w6", ["w7", "w3", "w4", "w5"], _KITE, ["w2", "w1", "w8"], "w2-w1 w1-w8 w8-w7 w7-w2 w7-w1",
                 ("w7", "w4"), ("w4-w7", "w5-w7")),
        "rc3b": ("w5", ["w6", "w2", "w3", "w4"], _DART, ["w1", "w8", "w7"], "w1-w8 w8-w7 w7-w6 w6-w1 w1-w7",
                 ("w6", "w3"), ("w3-w6", "w4-w6")),
        "rc3c": ("w7", ["w5", "w2", "w1", "w8"], _KITE, ["w4", "w3", "w6"], "w4-w3 w3-w6 w6-w5 w5-w4 w5-w3",
                 ("w5", "w2"), ("w4-w6",)),
        "rc3d": ("w7", ["w4", "w2", "w1", "w8"], _DART, ["w3", "w6", "w5"], "w3-w6 w6-w5 w5-w4 w4-w3 w3-w5",
                 ("w4", "w2"), ("w4-w6",)),
    }
    for pid, (hub, rim, shape, side, extra, pents, ne) in rc3.items():
        pos, e = _fan(hub, rim)
        _attach(pos, rim[0], shape, side)
        add(_make(pid, {k: pos[k] for k in _ws(1, 8)}, e + " " + extra, pents=pents, nonedges=ne, counts=c8))

    c11 = ("w11", _ws(1, 10), 2)
    pos, e = _fan("w8", ["w9", "w5", "w6", "w7"])
    _attach(pos, "w9", _KITE, ["w4", "w3", "w10"])
    _attach(pos, "w7", _KITE, ["w2", "w1", "w11"], mirror=True)
    add(_make("rc6a", {k: pos[k] for k in _ws(1, 11)},
              e + " w4-w3 w3-w10 w10-w9 w9-w4 w9-w3 w2-w1 w1-w11 w11-w7 w7-w2 w1-w7",
              pents=("w9", "w6", "w7"), nonedges=("w6-w9", "w7-w9"),
              counts=(c11, ("w10", _ws(3, 9), 2))))

    pos, e = _fan("w7", ["w8", "w4", "w5", "w6"])
    _attach(pos, "w8", _WHEEL, ["w3", "w10", "w9", "x"])
    _attach(pos, "w6", _KITE, ["w2", "w1", "w11"], mirror=True)
    add(_make("rc6b", {k: pos[k] for k in _ws(1, 11) + ["x"]},
              e + " w8-w3 w3-w10 w10-x x-w8 w9-w3 w9-w10 w9-x w9-w8 w2-w1 w1-w11 w11-w6 w6-w2 w1-w6",
              pents=("w8", "w5", "w6"), hollow=("x",), nonedges=("w5-w8", "w6-w8"),
              counts=(c11, ("w10", _ws(3, 9), 2))))

    pos, e = _fan("w9", ["w10", "w3", "w4", "w6"])
    _attach(pos, "w10", _KITE, ["w2", "w1", "w11"])
    _attach(pos, "w6", _WHEEL, ["w5", "w8", "w7", "y"], mirror=True)
    add(_make("rc7a", {k: pos[k] for k in _ws(1, 11) + ["y"]},
              e + " w2-w1 w1-w11 w11-w10 w10-w2 w10-w1 w6-w5 w5-w8 w8-y y-w6 w7-w5 w7-w8 w7-y w7-w6",
              pents=("w10", "w4", "w6"), hollow=("y",),
              counts=(("w10", _ws(3, 9), 2), c11)))

    pos, e = _fan("w6", ["w7", "w3", "w4", "w5"])
    _attach(pos, "w7", _WHEEL, ["w2", "w9", "w8", "x"])
    _attach(pos, "w5", _WHEEL, ["w1", "w11", "w10", "y"], mirror=True)
    base7b = (e + " w7-w2 w2-w9 w9-x x-w7 w8-w2 w8-w9 w8-x w8-w7"
              " w5-w1 w1-w11 w11-y y-w5 w10-w1 w10-w11 w10-y w10-w5")
    keep = {k: pos[k] for k in _ws(1, 11) + ["x", "y"]}
    add(_make("rc7b", keep, base7b, pents=("w7", "w4", "w5"), hollow=("x", "y"),
              counts=(("w9", _ws(2, 8), 2), c11)))
    # the two cases of the reducibility proof, as configurations with one extra edge
    add(_make("rc7b_w2", keep, base7b + " w11-w2", pents=("w7", "w4", "w5"), hollow=("x", "y"),
              counts=(("w9", _ws(2, 8), 2),), note="case w11w2 in E(G)", draw=False))
    add(_make("rc7b_w9", keep, base7b + " w11-w9", pents=("w7", "w4", "w5"), hollow=("x", "y"),
              counts=(("w9", _ws(2, 8), 2),), note="case w11w9 in E(G)", draw=False))
    return lib


LIBRARY = _library()
RC_IDS = ("rc1", "rc2a", "rc2b", "rc3a", "rc3b", "rc3c", "rc3d", "rc6a", "rc6b", "rc7a", "rc7b")
FORBIDDEN_IDS = ("fig4a", "fig4b", "fig4c")


def get(pid) -> Pattern:
    try:
        return LIBRARY[pid]
    except KeyError:
        raise UnknownPattern(pid) from None


# matching -----------------------------------------------------------------------


def _side_conditions(p, G, img):
    out = []
    adj = G.adjacency
    for a, b in p.nonedges:
        out.append((f"{p.names[a]}{p.names[b]} not in E", img[b] not in adj[img[a]]))
    for v, S, c in p.counts:
        got = len(adj[img[v]] & {img[x] for x in S})
        label = "{" + ",".join(p.names[x] for x in sorted(S)) + "}"
        out.append((f"|N({p.names[v]}) & {label}| = {c}", got == c))
    if p.internal:
        out.append(("internal", all(G.is_internal(x) for x in img)))
    return out


def _degree_ok(p, i, G, x):
    d = p.degree[i]
    if d is None:
        return G.degree(x) >= len(p.adj[i])
    return G.degree(x) == d


def iter_maps(p, G):
    """Every injective map (as a tuple of images) meeting all conditions."""
    order = p.order
    pos = {v: t for t, v in enumerate(order)}
    back = [[u for u in p.adj[v] if pos[u] < pos[v]] for v in order]
    non = [[] for _ in order]
    for a, b in p.nonedges:
        hi, lo = (a, b) if pos[a] > pos[b] else (b, a)
        non[pos[hi]].append(lo)
    adj = G.adjacency
    img = [-1] * p.size
    used = set()
    internal = p.internal
    outer = G.outer_vertices

    def rec(t):
        if t == p.size:
            if all(ok for _, ok in _side_conditions(p, G, img)):
                yield tuple(img)
            return
        v = order[t]
        if back[t]:
            cands = adj[img[back[t][0]]]
        else:
            cands = range(G.n)
        for x in cands:
            if x in used or (internal and x in outer):
                continue
            if not _degree_ok(p, v, G, x):
                continue
            if any(img[u] not in adj[x] for u in back[t]):
                continue
            if any(img[u] in adj[x] for u in non[t]):
                continue
            img[v] = x
            used.add(x)
            yield from rec(t + 1)
            used.discard(x)
            img[v] = -1

    yield from rec(0)


def find_pattern(G, pattern_id):
    """Matches of a library pattern, one per automorphism class."""
    p = get(pattern_id)
    seen = {}
    for img in iter_maps(p, G):
        key = p.canonical(img)
        if key not in seen:
            seen[key] = img
    out = []
    for key in sorted(seen):
        img = seen[key]
        out.append(
            PatternMatch(
                p.id,
                {p.names[i]: img[i] for i in range(p.size)},
                _side_conditions(p, G, img),
            )
        )
    return out
