"""Brute-force oracles used to derive expected values and to cross-check
the fast detectors and solvers.

These share no search code with the modules they check.  Pattern counting
falls back to networkx VF2 (``pip install .[oracles]``) when the degree
filtered product of candidate images is too large to enumerate.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .patterns import get as get_pattern

PRODUCT_LIMIT = 200_000
SUBSET_LIMIT = 16


def adjacency_matrix(G):
    A = np.zeros((G.n, G.n), dtype=bool)
    for u, v in G.edges:
        A[u, v] = A[v, u] = True
    return A


# chorded 6-cycles ------------------------------------------------------------------


def _cyclic_orders():
    """Index sequences of a 6-cycle starting at 0 with seq[1] < seq[5]."""
    out = []
    for p in itertools.permutations(range(1, 6)):
        if p[0] < p[4]:
            out.append((0,) + p)
    return np.array(out, dtype=np.int64)


_ORDERS = _cyclic_orders()
_CHORDS = [(i, (i + 2) % 6) for i in range(6)] + [(0, 3), (1, 4), (2, 5)]


def _six_cycles_by_subsets(A, n):
    subsets = np.array(list(itertools.combinations(range(n), 6)), dtype=np.int64)
    seq = subsets[:, _ORDERS]  # (subsets, 60, 6)
    ok = np.ones(seq.shape[:2], dtype=bool)
    for i in range(6):
        ok &= A[seq[..., i], seq[..., (i + 1) % 6]]
    return seq[ok]


def _six_cycles_nx(G):
    import networkx as nx

    H = nx.Graph(list(G.edges))
    out = []
    for c in nx.simple_cycles(H, length_bound=6):
        if len(c) != 6:
            continue
        i = c.index(min(c))
        c = c[i:] + c[:i]
        if c[1] > c[5]:
            c = [c[0]] + c[:0:-1]
        out.append(c)
    return np.array(out, dtype=np.int64).reshape(-1, 6)


def chorded_6_cycles(G, method="auto"):
    """Every (6-cycle, chord).

    Up to ``SUBSET_LIMIT`` vertices every 6-subset is tried in all 60
    cyclic orders; larger graphs use networkx's bounded cycle listing.
    """
    if G.n < 6:
        return []
    A = adjacency_matrix(G)
    if method == "subsets" or (method == "auto" and G.n <= SUBSET_LIMIT):
        cycles = _six_cycles_by_subsets(A, G.n)
    else:
        cycles = _six_cycles_nx(G)
    out = []
    for i, j in _CHORDS:
        hit = A[cycles[:, i], cycles[:, j]]
        for c in cycles[hit]:
            a, b = int(c[i]), int(c[j])
            out.append((tuple(int(x) for x in c), (min(a, b), max(a, b))))
    return sorted(out)


# separating triangles -------------------------------------------------------------------


def separating_triangles(G):
    """3-cycles that bound no face.

    In a simple plane graph a side of a 3-cycle with no vertex in it holds
    no edge either, so it is a face; a 3-cycle is separating exactly when
    neither side is a face.
    """
    A = adjacency_matrix(G)
    facial = {frozenset(f.boundary) for f in G.faces if f.degree == 3}
    out = []
    for a, b, c in itertools.combinations(range(G.n), 3):
        if A[a, b] and A[b, c] and A[a, c] and frozenset((a, b, c)) not in facial:
            out.append((a, b, c))
    return out


# clusters -----------------------------------------------------------------------------


def cluster_kinds(G):
    """Cluster kinds from face counts and vertex sets alone."""
    tris = [f for f in G.faces if f.degree == 3 and f.id != G.outer]
    parent = {f.id: f.id for f in tris}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edge_face = {}
    for f in tris:
        b = f.boundary
        for i in range(3):
            e = frozenset((b[i], b[(i + 1) % 3]))
            if e in edge_face:
                parent[find(f.id)] = find(edge_face[e])
            else:
                edge_face[e] = f.id
    comps = {}
    for f in tris:
        comps.setdefault(find(f.id), []).append(f)
    kinds = []
    for fs in comps.values():
        verts = set().union(*(set(f.boundary) for f in fs))
        common = set.intersection(*(set(f.boundary) for f in fs))
        k = len(fs)
        if k == 1:
            kinds.append("C1")
        elif k == 2 and len(verts) == 4:
            kinds.append("C2")
        elif k == 3 and len(verts) == 5 and len(common) == 1:
            kinds.append("C3")
        elif k == 4 and len(verts) == 5 and len(common) == 1 and G.degree(next(iter(common))) == 4:
            kinds.append("C4")
        else:
            kinds.append("unclassifiable")
    return sorted(kinds)


# pattern counts ---------------------------------------------------------------------------


def _conditions_hold(p, A, img):
    for a, b in p.nonedges:
        if A[img[a], img[b]]:
            return False
    for v, S, c in p.counts:
        if sum(bool(A[img[v], img[x]]) for x in S) != c:
            return False
    return True


def _candidates(p, G):
    out = []
    for i in range(p.size):
        need = p.degree[i]
        pdeg = sum(1 for e in p.edges if i in e)
        cs = []
        for x in range(G.n):
            d = G.degree(x)
            if (need is not None and d != need) or (need is None and d < pdeg):
                continue
            if p.internal and not G.is_internal(x):
                continue
            cs.append(x)
        out.append(cs)
    return out


def _maps_product(p, G, A, cands):
    grids = np.meshgrid(*[np.array(c, dtype=np.int64) for c in cands], indexing="ij")
    img = np.stack([g.ravel() for g in grids], axis=1)
    s = np.sort(img, axis=1)
    ok = np.all(s[:, 1:] != s[:, :-1], axis=1)
    for a, b in p.edges:
        ok &= A[img[:, a], img[:, b]]
    for a, b in p.nonedges:
        ok &= ~A[img[:, a], img[:, b]]
    for v, S, c in p.counts:
        cnt = sum(A[img[:, v], img[:, x]].astype(np.int64) for x in S)
        ok &= cnt == c
    return [tuple(int(x) for x in row) for row in img[ok]]


def _maps_vf2(p, G, A, cands):
    import networkx as nx
    from networkx.algorithms import isomorphism

    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    P = nx.Graph()
    P.add_nodes_from(range(p.size))
    P.add_edges_from(p.edges)
    allowed = [set(c) for c in cands]
    out = []
    gm = isomorphism.GraphMatcher(H, P)
    for m in gm.subgraph_monomorphisms_iter():
        img = [None] * p.size
        for h, q in m.items():
            img[q] = h
        if all(img[i] in allowed[i] for i in range(p.size)) and _conditions_hold(p, A, img):
            out.append(tuple(img))
    return out


def pattern_maps(p, G, method="auto"):
    A = adjacency_matrix(G)
    cands = _candidates(p, G)
    size = math.prod(len(c) for c in cands)
    if size == 0:
        return []
    if method == "product" or (method == "auto" and size <= PRODUCT_LIMIT):
        return _maps_product(p, G, A, cands)
    return _maps_vf2(p, G, A, cands)


def automorphism_count(p):
    """Pattern self-isomorphisms keeping marks and side conditions."""
    import networkx as nx
    from networkx.algorithms import isomorphism

    P = nx.Graph()
    for i in range(p.size):
        P.add_node(i, mark=p.degree[i])
    P.add_edges_from(p.edges)
    nonedges = {frozenset(e) for e in p.nonedges}
    counts = {(v, frozenset(S), c) for v, S, c in p.counts}
    gm = isomorphism.GraphMatcher(P, P, node_match=lambda a, b: a["mark"] == b["mark"])
    total = 0
    for m in gm.isomorphisms_iter():
        if {frozenset((m[a], m[b])) for a, b in p.nonedges} != nonedges:
            continue
        if {(m[v], frozenset(m[x] for x in S), c) for v, S, c in p.counts} != counts:
            continue
        total += 1
    return total


def pattern_count(G, pattern_id, method="auto"):
    """Number of matches up to the pattern's automorphisms."""
    p = get_pattern(pattern_id)
    maps = pattern_maps(p, G, method)
    aut = automorphism_count(p)
    if len(maps) % aut:
        raise AssertionError(f"{len(maps)} maps not divisible by |Aut| = {aut}")
    return len(maps) // aut


# strict degeneracy ---------------------------------------------------------------------------


def sfd_by_subsets(cover, f, T):
    """Literal definition: every nonempty subset of picks has a member whose
    degree inside the subset is below its weight."""
    picks = [v for v in range(cover.n) if T[v] >= 0]
    k = len(picks)
    A = np.zeros((k, k), dtype=np.int64)
    for i, u in enumerate(picks):
        for j, v in enumerate(picks):
            if u < v and (u, v) in cover.matchings:
                if (T[u], T[v]) in cover.matchings[(u, v)]:
                    A[i, j] = A[j, i] = 1
    w = np.array([f(v, T[v]) for v in picks], dtype=np.int64)
    masks = ((np.arange(1, 2 ** k)[:, None] >> np.arange(k)) & 1).astype(bool)
    deg = (masks.astype(np.int64) @ A) * masks
    low = (deg < w) & masks
    return bool(np.all(low.any(axis=1))) if k else True


# DP-chromatic number -----------------------------------------------------------------------------


def dp_colourable_all(n, edges, k, tree):
    """True if every perfect-matching cover with identity on ``tree`` has a
    DP-colouring, checking all k^n colour choices at once."""
    rest = [e for e in edges if e not in tree]
    choices = np.array(list(itertools.product(range(k), repeat=n)), dtype=np.int64)
    base = np.ones(len(choices), dtype=bool)
    for u, v in tree:
        base &= choices[:, u] != choices[:, v]
    perms = list(itertools.permutations(range(k)))
    pa = np.array(perms, dtype=np.int64)
    for combo in itertools.product(range(len(perms)), repeat=len(rest)):
        ok = base.copy()
        for (u, v), pi in zip(rest, combo):
            ok &= pa[pi][choices[:, u]] != choices[:, v]
        if not ok.any():
            return False
    return True


def dp_chromatic(G, k_max=6):
    """Least k for which every cover is DP-colourable, by literal enumeration."""
    import networkx as nx

    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    tree = {tuple(sorted(e)) for e in nx.minimum_spanning_edges(H, data=False)}
    edges = [tuple(sorted(e)) for e in G.edges]
    for k in range(1, k_max + 1):
        if dp_colourable_all(G.n, edges, k, tree):
            return k
    return None


def dp_chromatic_feasible(G, k_max=4, limit=20_000):
    rest = len(G.edges) - (G.n - 1)
    return G.n <= 8 and math.factorial(k_max) ** rest <= limit


# expected corpus outcomes -------------------------------------------------------------------------


def derive_expected(G):
    """Outcome record for one graph, from the oracles above only."""
    from .patterns import LIBRARY

    out = {
        "n": G.n,
        "m": len(G.edges),
        "outer_degree": G.faces[G.outer].degree,
        "face_degrees": sorted(f.degree for f in G.faces),
        "chorded_6_cycles": len(chorded_6_cycles(G)),
        "separating_triangles": [list(t) for t in separating_triangles(G)],
        "cluster_kinds": cluster_kinds(G),
        "patterns": {},
    }
    for pid in LIBRARY:
        c = pattern_count(G, pid)
        if c:
            out["patterns"][pid] = c
    if dp_chromatic_feasible(G):
        out["dp_chromatic"] = dp_chromatic(G, k_max=4)
    return out
