"""Structure scans: chorded 6-cycles, 3-face clusters and hypothesis lints."""

from __future__ import annotations

from dataclasses import dataclass

from . import patterns
from .plane import separating_3_cycles


class UnclassifiableCluster(ValueError):
    def __init__(self, faces, reason):
        super().__init__(f"3-faces {sorted(faces)}: {reason}")
        self.faces = frozenset(faces)
        self.reason = reason


# 6-cycles --------------------------------------------------------------------------


def six_cycles(G):
    """Every 6-cycle once, starting at its least vertex, second < last."""
    adj = G.adjacency
    out = []
    for s in range(G.n):
        path = [s]
        on = {s}

        def rec():
            v = path[-1]
            if len(path) == 6:
                if s in adj[v] and path[1] < path[5]:
                    out.append(tuple(path))
                return
            for u in adj[v]:
                if u > s and u not in on:
                    path.append(u)
                    on.add(u)
                    rec()
                    on.discard(u)
                    path.pop()

        rec()
    return out


def find_chorded_6_cycles(G):
    """(6-cycle, chord) pairs; chords join positions at distance 2 or 3."""
    adj = G.adjacency
    out = []
    for c in six_cycles(G):
        for i in range(6):
            for d in (2, 3):
                if d == 3 and i >= 3:
                    continue
                a, b = c[i], c[(i + d) % 6]
                if b in adj[a]:
                    out.append((c, (min(a, b), max(a, b))))
    return out


# clusters ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Cluster:
    faces: frozenset
    kind: str
    labeled_vertices: dict
    is_internal: bool

    @property
    def vertices(self):
        return frozenset(self.labeled_vertices.values())

    def u(self, i):
        return self.labeled_vertices[f"u{i}"]

    def to_json(self):
        return {
            "faces": sorted(self.faces),
            "kind": self.kind,
            "labeled_vertices": dict(self.labeled_vertices),
            "is_internal": self.is_internal,
        }


def triangle_faces(G):
    return [f.id for f in G.faces if f.degree == 3 and f.id != G.outer]


def _components(G):
    tri = set(triangle_faces(G))
    seen = set()
    comps = []
    for f in sorted(tri):
        if f in seen:
            continue
        comp = {f}
        todo = [f]
        seen.add(f)
        while todo:
            g = todo.pop()
            for h in G.adjacent_faces(g):
                if h in tri and h not in seen:
                    seen.add(h)
                    comp.add(h)
                    todo.append(h)
        comps.append(frozenset(comp))
    return comps


def _classify(G, comp):
    faces = sorted(comp)
    fs = [set(G.faces[f].boundary) for f in faces]
    k = len(faces)
    if k == 1:
        a, b, c = G.faces[faces[0]].boundary
        return "C1", {"u1": a, "u2": b, "u3": c}
    if k == 2:
        shared = fs[0] & fs[1]
        if len(shared) != 2 or len(G.shared_edges(faces[0], faces[1])) != 1:
            raise UnclassifiableCluster(comp, "two 3-faces not sharing exactly one edge")
        u1, u3 = sorted(shared)
        (u2,) = fs[0] - shared
        (u4,) = fs[1] - shared
        if u2 == u4:
            raise UnclassifiableCluster(comp, "two 3-faces on the same vertex set")
        return "C2", {"u1": u1, "u2": u2, "u3": u3, "u4": u4}
    hubs = set.intersection(*fs)
    if k == 3:
        adjp = {(a, b) for a in range(3) for b in range(3) if a != b and faces[b] in G.adjacent_faces(faces[a])}
        mids = [i for i in range(3) if sum((i, j) in adjp for j in range(3)) == 2]
        if len(hubs) != 1 or len(mids) != 1 or len(adjp) != 4:
            raise UnclassifiableCluster(comp, "three 3-faces that are not a fan")
        (u1,) = hubs
        m = mids[0]
        ends = [i for i in range(3) if i != m]
        u3, u4 = sorted(fs[m] - {u1})
        # orient so that u3 is shared with the first end face
        e0, e1 = ends
        if u3 not in fs[e0]:
            e0, e1 = e1, e0
        (u2,) = fs[e0] - {u1, u3}
        (u5,) = fs[e1] - {u1, u4}
        if len({u1, u2, u3, u4, u5}) != 5:
            raise UnclassifiableCluster(comp, "fan closes up around a 3-vertex")
        return "C3", {"u1": u1, "u2": u2, "u3": u3, "u4": u4, "u5": u5}
    if k == 4:
        if len(hubs) != 1:
            raise UnclassifiableCluster(comp, "four 3-faces without a common vertex")
        (u1,) = hubs
        around = G.faces_incident(u1)
        if sorted(around) != faces:
            raise UnclassifiableCluster(comp, "four 3-faces that are not a closed wheel")
        rim = list(G.rotations[u1])
        if len(rim) != 4:
            raise UnclassifiableCluster(comp, "wheel hub is not a 4-vertex")
        i = rim.index(min(rim))
        rim = rim[i:] + rim[:i]
        u2 = rim[0]
        nb = sorted((rim[1], rim[3]))
        u3, u5 = nb
        u4 = rim[2]
        return "C4", {"u1": u1, "u2": u2, "u3": u3, "u4": u4, "u5": u5}
    raise UnclassifiableCluster(comp, f"{k} 3-faces in one component")


def clusters(G, strict=True):
    """Clusters of bounded 3-faces; with ``strict=False`` returns (ok, bad)."""
    good = []
    bad = []
    for comp in _components(G):
        try:
            kind, lab = _classify(G, comp)
        except UnclassifiableCluster as exc:
            if strict:
                raise
            bad.append(exc)
            continue
        internal = all(G.is_internal(v) for v in lab.values())
        good.append(Cluster(comp, kind, lab, internal))
    if strict:
        return good
    return good, bad


def c4_labelings(c):
    """The eight rim labellings of a C4: four rotations in each direction."""
    rim = [c.u(2), c.u(3), c.u(4), c.u(5)]
    order = [rim[0], rim[1], rim[2], rim[3]]
    # cyclic rim order is u2, u3, u4, u5 around the hub
    out = []
    for d in (1, -1):
        for i in range(4):
            r = [order[(i + d * j) % 4] for j in range(4)]
            out.append({"u1": c.u(1), "u2": r[0], "u3": r[1], "u4": r[2], "u5": r[3]})
    return out


# lints ------------------------------------------------------------------------------


def _paths_between(G, a, b, avoid, max_len):
    """Lengths of simple a-b paths avoiding ``avoid`` up to ``max_len`` edges."""
    adj = G.adjacency
    found = {}
    path = [a]
    on = {a}

    def rec():
        v = path[-1]
        if len(path) - 1 >= max_len:
            return
        for u in adj[v]:
            if u in on or u in avoid:
                continue
            if u == b:
                found.setdefault(len(path), list(path) + [b])
                continue
            path.append(u)
            on.add(u)
            rec()
            on.discard(u)
            path.pop()

    rec()
    return found


def _normally_adjacent(G, f, g):
    shared = G.shared_edges(f, g)
    if len(shared) != 1:
        return False
    inter = set(G.faces[f].boundary) & set(G.faces[g].boundary)
    return inter == set(shared[0])


def _face_path(G, f, g):
    """Shared boundary of two faces as a vertex path if it is one, else None."""
    edges = G.shared_edges(f, g)
    if not edges:
        return None
    b = G.faces[f].boundary
    L = len(b)
    on = [(b[i], b[(i + 1) % L]) in set(edges) for i in range(L)]
    if all(on):
        return None
    start = next(i for i in range(L) if on[i] and not on[i - 1])
    path = [b[start]]
    i = start
    while on[i % L]:
        path.append(b[(i + 1) % L])
        i += 1
    if len(path) - 1 != len(edges):
        return None
    return path


THEOREM_TIER = ("outer3", "chorded6", "fig4c")
FULL_TIER = THEOREM_TIER + (
    "NS", "MINDEG", "clusters",
    "ST(i)", "ST(ii)", "ST(iii)", "ST(iv)", "ST(v)", "ST(vi)", "ST(vii)",
    "ST(viii)", "ST(ix)", "ST(x)", "ST(xi)", "ST(xii)", "ST(xiii)", "ST(xiv)",
    "K4-", "RC",
)


def lint_hypotheses(G, tier="full"):
    """Evaluate each predicate; returns ``{name: {"ok": bool, "witnesses": [...]}}``."""
    names = THEOREM_TIER if tier == "theorem" else FULL_TIER
    report = {}
    cl = None
    for name in names:
        w = []
        try:
            if name in ("clusters",) or name.startswith("ST(v") or name.startswith("ST(x") or name.startswith("ST(i"):
                if cl is None:
                    cl = clusters(G, strict=False)
            w = _CHECKS[name](G, cl)
        except Exception as exc:  # a lint never throws
            w = [{"error": f"{type(exc).__name__}: {exc}"}]
        report[name] = {"ok": not w, "witnesses": w}
    return report


def lint_ok(report):
    return all(r["ok"] for r in report.values())


def failed(report):
    return [k for k, r in report.items() if not r["ok"]]


def _outer3(G, cl):
    d = G.faces[G.outer].degree
    return [] if d == 3 else [{"outer_degree": d}]


def _chorded6(G, cl):
    out = find_chorded_6_cycles(G)
    return [{"cycle": list(c), "chord": list(ch)} for c, ch in out[:5]]


def _fig4c(G, cl):
    return [m.vertex_map for m in patterns.find_pattern(G, "fig4c")[:3]]


def _ns(G, cl):
    return [{"triangle": list(t)} for t, _, _ in separating_3_cycles(G)]


def _mindeg(G, cl):
    return [{"vertex": v, "degree": G.degree(v)} for v in range(G.n) if G.is_internal(v) and G.degree(v) < 4]


def _clusters(G, cl):
    return [{"faces": sorted(e.faces), "reason": e.reason} for e in cl[1]]


def _st1(G, cl):
    out = []
    for f in G.faces:
        if f.degree == 4 and f.id != G.outer:
            a, b, c, d = f.boundary
            if G.has_edge(a, c) or G.has_edge(b, d):
                out.append({"face": f.id})
    return out


def _st2(G, cl):
    out = []
    for f in G.faces:
        if f.degree != 3:
            continue
        for g in G.adjacent_faces(f.id):
            if G.faces[g].degree <= 4 and not _normally_adjacent(G, f.id, g):
                out.append({"faces": [f.id, g]})
    return out


def _st3(G, cl):
    return [m.vertex_map for m in patterns.find_pattern(G, "k4")[:3]]


def _st4(G, cl):
    out = []
    for f in G.faces:
        if f.degree == 4 and f.id != G.outer:
            for g in G.adjacent_faces(f.id):
                if g > f.id and G.faces[g].degree == 4 and g != G.outer:
                    out.append({"faces": [f.id, g]})
    return out


def _st5(G, cl):
    out = []
    for v in range(G.n):
        d = G.degree(v)
        if d >= 5 and G.is_internal(v):
            t = G.stats(v).t
            if t > (3 * d) // 4:
                out.append({"vertex": v, "degree": d, "t": t})
    return out


def _st6(G, cl):
    out = []
    for f in G.faces:
        if f.degree != 5 or f.id == G.outer:
            continue
        for g in G.adjacent_faces(f.id):
            if G.faces[g].degree != 3:
                continue
            path = _face_path(G, f.id, g)
            ok = g == G.outer and path is not None and len(path) == 3 and G.degree(path[1]) == 2
            if not ok:
                out.append({"five_face": f.id, "three_face": g})
    return out


def _st7(G, cl):
    out = []
    for f in G.faces:
        if f.degree != 4 or f.id == G.outer:
            continue
        tris = [g for g in G.adjacent_faces(f.id) if G.faces[g].degree == 3]
        if len(tris) < 2:
            continue
        ok = False
        if len(tris) == 2:
            e1 = G.shared_edges(f.id, tris[0])
            e2 = G.shared_edges(f.id, tris[1])
            if len(e1) == 1 and len(e2) == 1:
                common = set(e1[0]) & set(e2[0])
                apex1 = set(G.faces[tris[0]].boundary) - set(e1[0])
                apex2 = set(G.faces[tris[1]].boundary) - set(e2[0])
                if len(common) == 1 and apex1 == apex2 and G.outer in tris:
                    (v2,) = common
                    ok = G.degree(v2) == 3
        if not ok:
            out.append({"four_face": f.id, "three_faces": tris})
    return out


def _adjacent_nonmember(G, c):
    out = set()
    for f in c.faces:
        for g in G.adjacent_faces(f):
            if g not in c.faces:
                out.add(g)
    return out


def _cluster_nbhd(kind, allow_d):
    def check(G, cl):
        out = []
        for c in cl[0]:
            if c.kind != kind:
                continue
            for g in _adjacent_nonmember(G, c):
                if g == G.outer and allow_d:
                    if kind == "C3":
                        u1, u2, u5 = c.u(1), c.u(2), c.u(5)
                        if not (G.has_edge(u2, u5) and set(G.faces[g].boundary) == {u1, u2, u5}):
                            out.append({"cluster": sorted(c.faces), "face": g, "why": "C3 meets D badly"})
                    continue
                if G.faces[g].degree < 6:
                    out.append({"cluster": sorted(c.faces), "face": g, "degree": G.faces[g].degree})
        return out

    return check


def _st11(G, cl):
    out = []
    for c in cl[0]:
        if c.kind != "C4":
            continue
        for lab in c4_labelings(c):
            found = _paths_between(G, lab["u2"], lab["u3"], {lab["u1"], lab["u4"], lab["u5"]}, 4)
            bad = [p for L, p in found.items() if L in (2, 3, 4)]
            if bad:
                out.append({"cluster": sorted(c.faces), "path": bad[0]})
    return out


def _st12(G, cl):
    out = []
    for c in cl[0]:
        if c.kind != "C4":
            continue
        for lab in c4_labelings(c)[:2]:
            found = _paths_between(G, lab["u2"], lab["u4"], {lab["u1"], lab["u3"], lab["u5"]}, 3)
            bad = [p for L, p in found.items() if L in (1, 2, 3)]
            if bad:
                out.append({"cluster": sorted(c.faces), "path": bad[0]})
    return out


def _c4_c3_pairs(G, cl):
    c4s = [c for c in cl[0] if c.kind == "C4"]
    c3s = [c for c in cl[0] if c.kind == "C3"]
    for a in c4s:
        for b in c3s:
            common = a.vertices & b.vertices
            fives = [v for v in common if G.degree(v) == 5]
            if fives:
                yield a, b, common, fives


def _st13(G, cl):
    out = []
    for a, b, common, fives in _c4_c3_pairs(G, cl):
        v = fives[0]
        if len(common) != 1 or v not in (b.u(2), b.u(5)) or v == a.u(1):
            out.append({"c4": sorted(a.faces), "c3": sorted(b.faces), "common": sorted(common)})
    return out


def _st14(G, cl):
    out = []
    pairs = list(_c4_c3_pairs(G, cl))
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            a, b, _, f1 = pairs[i]
            a2, b2, _, f2 = pairs[j]
            if a is not a2 or b is b2:
                continue
            if any(G.has_edge(x, y) for x in f1 for y in f2) and b.vertices & b2.vertices:
                out.append({"c4": sorted(a.faces), "c3": [sorted(b.faces), sorted(b2.faces)]})
    return out


def _k4minus(G, cl):
    return [m.vertex_map for m in patterns.find_pattern(G, "diamond")[:3]]


def _rc(G, cl):
    out = []
    for pid in patterns.RC_IDS:
        ms = patterns.find_pattern(G, pid)
        if ms:
            out.append({"pattern": pid, "vertex_map": ms[0].vertex_map})
    return out


_CHECKS = {
    "outer3": _outer3,
    "chorded6": _chorded6,
    "fig4c": _fig4c,
    "NS": _ns,
    "MINDEG": _mindeg,
    "clusters": _clusters,
    "ST(i)": _st1,
    "ST(ii)": _st2,
    "ST(iii)": _st3,
    "ST(iv)": _st4,
    "ST(v)": _st5,
    "ST(vi)": _st6,
    "ST(vii)": _st7,
    "ST(viii)": _cluster_nbhd("C4", False),
    "ST(ix)": _cluster_nbhd("C3", True),
    "ST(x)": _cluster_nbhd("C2", True),
    "ST(xi)": _st11,
    "ST(xii)": _st12,
    "ST(xiii)": _st13,
    "ST(xiv)": _st14,
    "K4-": _k4minus,
    "RC": _rc,
}


def adj_relabel(G, match, pattern_id):
    """Lemma-style relabelling for rc6b/rc7a: try swapping w2 and w11.

    Returns the vertex map (possibly swapped) satisfying
    ``|N(w11) ∩ {w1..w10}| = 2`` or None.
    """
    vm = dict(match)
    adj = G.adjacency
    for cand in (vm, {**vm, "w2": vm["w11"], "w11": vm["w2"]}):
        ring = {cand[f"w{i}"] for i in range(1, 11)}
        if len(adj[cand["w11"]] & ring) == 2:
            return cand
    return None
