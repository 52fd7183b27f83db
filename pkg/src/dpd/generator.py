"""Random plane graphs: stacked triangulation, random flips, then edge
deletions that keep the graph connected, filtered by forbidden patterns.

Every attempt draws from ``default_rng([seed, index])`` so a stream is a
pure function of the seed and can be split by index.  Uniformity is not
claimed.
"""

from __future__ import annotations

import warnings

import numpy as np

from . import patterns
from .plane import PlaneGraph
from .scan import find_chorded_6_cycles

DEFAULT_CAP = 12
FILTER_NAMES = ("chorded6", "fig4", "outer3")


class FilterTooStrict(UserWarning):
    """Almost every attempt in a window was rejected."""


def _chorded6_free(G):
    return not find_chorded_6_cycles(G)


def _fig4_free(G):
    # fig4a/fig4b are the two chorded 6-cycles; fig4c needs 17 vertices
    if not _chorded6_free(G):
        return False
    return G.n < patterns.get("fig4c").size or not patterns.find_pattern(G, "fig4c")


def _outer3(G):
    return G.faces[G.outer].degree == 3


FILTERS = {"chorded6": _chorded6_free, "fig4": _fig4_free, "outer3": _outer3}


def parse_filters(spec):
    if spec is None or spec == "":
        return ()
    names = tuple(x.strip() for x in (spec.split(",") if isinstance(spec, str) else spec) if x.strip())
    for x in names:
        if x not in FILTERS:
            raise ValueError(f"unknown filter {x!r}; choose from {', '.join(FILTER_NAMES)}")
    return names


def passes(G, filters):
    return all(FILTERS[x](G) for x in filters)


# triangulations -----------------------------------------------------------------------


def _triangulation(n, rng):
    """Oriented faces of a random triangulation on n >= 3 vertices.

    Face 0 is the outer triangle (2, 1, 0).  Vertices are stacked into
    random bounded faces, then random diagonal flips mix the shape.
    """
    faces = [(2, 1, 0), (0, 1, 2)]
    for x in range(3, n):
        i = int(rng.integers(1, len(faces)))
        a, b, c = faces[i]
        faces[i] = (a, b, x)
        faces += [(b, c, x), (c, a, x)]
    for _ in range(3 * n):
        _flip(faces, rng)
    return faces


def _flip(faces, rng):
    dart = {}
    for i, f in enumerate(faces):
        for k in range(3):
            dart[(f[k], f[(k + 1) % 3])] = (i, f[(k + 2) % 3])
    i = int(rng.integers(1, len(faces)))
    k = int(rng.integers(3))
    a, b, c = faces[i][k], faces[i][(k + 1) % 3], faces[i][(k + 2) % 3]
    j, d = dart[(b, a)]
    if j == 0 or c == d or (c, d) in dart:
        return False
    faces[i] = (a, d, c)
    faces[j] = (b, c, d)
    return True


def _rotations(n, faces):
    succ = {}
    for f in faces:
        for k in range(3):
            u, v, w = f[k - 1], f[k], f[(k + 1) % 3]
            succ[(v, u)] = w
    rots = []
    for v in range(n):
        start = min(u for (x, u) in succ if x == v)
        rot = [start]
        while (nxt := succ[(v, rot[-1])]) != start:
            rot.append(nxt)
        rots.append(rot)
    return rots


# deletions ----------------------------------------------------------------------------


def _is_bridge(rots, u, v):
    seen = {u}
    todo = [u]
    while todo:
        x = todo.pop()
        for y in rots[x]:
            if (x, y) in ((u, v), (v, u)):
                continue
            if y == v:
                return False
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return True


def _delete(rots, u, v):
    rots[u].remove(v)
    rots[v].remove(u)


def _graph(n, rots):
    """PlaneGraph whose outer face is the one left of dart 2->1 (or a fallback)."""
    G = PlaneGraph(n, rots, 0)
    for a, b in ((2, 1), (1, 0), (0, 2)):
        if G.has_edge(a, b):
            return PlaneGraph(n, rots, G.face_of_dart(a, b))
    return PlaneGraph(n, rots, G.faces_incident(0)[0])


def _chord_pass(n, rots, rng, keep):
    """Delete chords until no chorded 6-cycle is left (keeping ``keep`` edges)."""
    for _ in range(4 * n * n):
        G = PlaneGraph(n, rots, 0)
        hits = find_chorded_6_cycles(G)
        if not hits:
            return True
        cyc, chord = hits[int(rng.integers(len(hits)))]
        cands = [chord] + [(cyc[i], cyc[(i + 1) % 6]) for i in range(6)]
        for u, v in cands:
            if frozenset((u, v)) not in keep and not _is_bridge(rots, u, v):
                _delete(rots, u, v)
                break
        else:
            return False
    return False


def attempt(n, seed, index, filters=()):
    """One candidate graph for (seed, index); filters only steer deletions."""
    rng = np.random.default_rng([seed, index])
    if n == 1:
        return PlaneGraph(1, [[]], 0)
    if n == 2:
        return PlaneGraph(2, [[1], [0]], 0)
    rots = _rotations(n, _triangulation(n, rng))
    keep = set()
    if "outer3" in filters:
        keep = {frozenset(e) for e in ((0, 1), (1, 2), (2, 0))}
    edges = [(u, v) for u in range(n) for v in rots[u] if u < v]
    rng.shuffle(edges)
    budget = int(rng.integers(0, len(edges) - (n - 1) + 1))
    for u, v in edges:
        if budget == 0:
            break
        if frozenset((u, v)) in keep or _is_bridge(rots, u, v):
            continue
        _delete(rots, u, v)
        budget -= 1
    if "chorded6" in filters or "fig4" in filters:
        _chord_pass(n, rots, rng, keep)
    return _graph(n, rots)


def random_instances(n, seed, filters=(), count=None, cap=DEFAULT_CAP, window=1000, max_reject=0.999,
                     start=0):
    """Yield graphs on ``n`` vertices passing every filter.

    Stops after ``count`` graphs (never, if None).  When more than
    ``max_reject`` of the last ``window`` attempts were rejected a
    FilterTooStrict warning is issued and the stream ends.
    """
    if seed is None:
        raise ValueError("a seed is required")
    if n < 1 or n > cap:
        raise ValueError(f"n must be in 1..{cap}")
    filters = parse_filters(filters)
    made = 0
    recent = []
    index = start
    while count is None or made < count:
        G = attempt(n, seed, index, filters)
        index += 1
        ok = passes(G, filters)
        recent.append(ok)
        if len(recent) > window:
            recent.pop(0)
        if ok:
            made += 1
            yield G
        elif len(recent) == window and recent.count(False) > max_reject * window:
            warnings.warn(
                f"{recent.count(False)} of the last {window} attempts rejected by {','.join(filters)}",
                FilterTooStrict,
                stacklevel=2,
            )
            return
