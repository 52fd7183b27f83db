"""Build plane graphs from drawings and pad them out to target degrees.

A *core* is a small embedded graph (usually a figure).  Padding fills chosen
holes of the core (its outer face and any non-triangular faces that stand for
unlabelled context) with spokes into a ring of fresh vertices, so every core
vertex reaches its target degree and the new faces have a chosen size where
the geometry allows it.  The outer hole is closed off by a fresh triangle,
which becomes the outer face D.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .plane import PlaneGraph, PlaneGraphError


class PaddingError(PlaneGraphError):
    pass


def rotations_from_coordinates(coords, edges):
    """Counter-clockwise rotation system of a straight-line drawing."""
    n = len(coords)
    nbrs = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    rot = []
    for v in range(n):
        x0, y0 = coords[v]
        rot.append(
            sorted(nbrs[v], key=lambda u: math.atan2(coords[u][1] - y0, coords[u][0] - x0))
        )
    return rot


def _signed_area(walk, coords):
    a = 0.0
    for i, v in enumerate(walk):
        x1, y1 = coords[v]
        x2, y2 = coords[walk[(i + 1) % len(walk)]]
        a += x1 * y2 - x2 * y1
    return a / 2


def from_coordinates(coords, edges):
    """Plane graph of a drawing; the outer face is the one of largest area."""
    rot = rotations_from_coordinates(coords, edges)
    G = PlaneGraph(len(coords), rot, 0)
    outer = max(G.faces, key=lambda f: abs(_signed_area(f.boundary, coords)))
    return PlaneGraph(G.n, G.rotations, outer.id)


@dataclass
class Hole:
    """A face of the core to be filled; ``spokes`` maps vertex -> count."""

    walk: tuple
    spokes: dict = field(default_factory=dict)
    outer: bool = False


@dataclass
class Padded:
    graph: PlaneGraph
    labels: dict
    core_faces: list


def _rotate_to(walk, start):
    i = walk.index(start)
    return walk[i:] + walk[:i]


def _find_face(core, walk):
    for f in core.faces:
        b = f.boundary
        if len(b) == len(walk) and walk[0] in b and tuple(_rotate_to(list(b), walk[0])) == tuple(walk):
            return f
    # accept the reversed description too
    rw = [walk[0]] + list(reversed(walk[1:]))
    for f in core.faces:
        b = f.boundary
        if len(b) == len(rw) and rw[0] in b and tuple(_rotate_to(list(b), rw[0])) == tuple(rw):
            return f
    raise PaddingError(f"{list(walk)} is not a face of the core")


def pad(core, targets, holes=None, names=None, face_size=6, default_target=None):
    """Pad ``core`` so each vertex ``v`` gets degree ``targets[v]``.

    ``holes`` lists walks of core faces to fill; the outer face is always a
    hole.  Spokes of a vertex go to the first hole (outer first) whose walk
    contains it unless a hole names its spokes explicitly.
    """
    names = list(names) if names else [str(v) for v in range(core.n)]
    tgt = {}
    for v in range(core.n):
        t = targets.get(v, default_target)
        tgt[v] = core.degree(v) if t is None else t
        if tgt[v] < core.degree(v):
            raise PaddingError(f"{names[v]} already has degree {core.degree(v)} > {t}")

    outer_face = core.faces[core.outer]
    hole_list = [Hole(outer_face.boundary, {}, True)]
    for h in holes or ():
        if isinstance(h, Hole):
            hole_list.append(Hole(tuple(_find_face(core, list(h.walk)).boundary), dict(h.spokes)))
        else:
            hole_list.append(Hole(tuple(_find_face(core, list(h)).boundary)))

    explicit = {}
    for h in hole_list:
        for v, c in h.spokes.items():
            explicit[v] = explicit.get(v, 0) + c
    for v in range(core.n):
        left = tgt[v] - core.degree(v) - explicit.get(v, 0)
        if left < 0:
            raise PaddingError(f"too many explicit spokes at {names[v]}")
        if left == 0:
            continue
        for h in hole_list:
            if v in h.walk:
                h.spokes[v] = h.spokes.get(v, 0) + left
                break
        else:
            raise PaddingError(f"{names[v]} lies on no hole")

    hole_ids = set()
    for h in hole_list:
        hole_ids.add(_find_face(core, list(h.walk)).id)
    faces = [list(f.boundary) for f in core.faces if f.id not in hole_ids]
    core_faces = list(range(len(faces)))
    labels = {names[v]: v for v in range(core.n)}
    counter = [core.n]

    def fresh(prefix):
        v = counter[0]
        counter[0] += 1
        labels[f"{prefix}{v}"] = v
        return v

    outer_index = None
    for h in hole_list:
        new = _fill(h, face_size, fresh)
        if h.outer:
            outer_index = len(faces) + new[1]
        faces.extend(new[0])
    for f in faces:
        if len(set(f)) != len(f):
            raise PaddingError(f"padding produced a non-simple face {f}")
    G = PlaneGraph.from_faces(faces, outer_index)
    return Padded(G, labels, core_faces)


def _fill(hole, size, fresh):
    """Faces replacing ``hole``; returns (faces, index of D or None)."""
    walk = list(hole.walk)
    positions = []
    for p, v in enumerate(walk):
        c = hole.spokes.get(v, 0)
        if c and v in walk[:p]:
            continue
        positions.extend([p] * c)
    if not positions:
        if hole.outer:
            raise PaddingError("outer hole needs spokes")
        return [walk], None
    if len(positions) == 1:
        raise PaddingError("a hole needs zero or at least two spokes")
    k = len(positions)
    segs = []
    for i in range(k):
        p, q = positions[i], positions[(i + 1) % k]
        if q > p or (q == p and i + 1 < k):
            seg = walk[p:q + 1]
        else:
            seg = walk[p:] + walk[:q + 1]
        segs.append(seg)
    gaps = [max(0, size - len(seg) - 1) for seg in segs]
    for i, seg in enumerate(segs):
        if len(seg) == 1 and gaps[i] == 0:
            gaps[i] = 1
    R = sum(gaps)
    need = 3 if (hole.outer or R > 0) else 0
    while R < need:
        j = min(range(k), key=lambda t: len(segs[t]) + gaps[t])
        gaps[j] += 1
        R += 1
    ring = [fresh("r") for _ in range(max(R, 1))]
    idx = [0]
    for g in gaps[:-1]:
        idx.append(idx[-1] + g)
    faces = []
    for i, seg in enumerate(segs):
        a, b = idx[i], idx[(i + 1) % k] if i + 1 < k else idx[0] + R
        back = [ring[j % len(ring)] for j in range(b, a - 1, -1)] if R else [ring[0]]
        if R and b == a:
            back = [ring[a % len(ring)]]
        faces.append(_dedupe_cycle(seg + back))
    if not hole.outer:
        if R >= 3:
            faces.append(ring[:])
        return faces, None
    return faces + _cap(ring, size, fresh), len(faces)


def _dedupe_cycle(face):
    if len(face) > 1 and face[0] == face[-1]:
        face = face[:-1]
    return face


def _cap(ring, size, fresh):
    """Faces between ``ring`` and a new outer triangle; D comes first."""
    R = len(ring)
    t = [fresh("t") for _ in range(3)]
    trans = size - 3
    same = size - 2
    if R >= 3 * trans:
        spare = R - 3 * trans
        extra = [0, 0, 0]
        i = 0
        while spare >= same:
            extra[i % 3] += 1
            spare -= same
            i += 1
        arcs = []
        for a in range(3):
            arcs.append([same] * extra[a] + [trans])
        arcs[0][-1] += spare
    else:
        base = [R // 3 + (1 if a < R % 3 else 0) for a in range(3)]
        arcs = [[b] for b in base]
    faces = [[t[0], t[1], t[2]]]
    pos = 0
    for a in range(3):
        for j, g in enumerate(arcs[a]):
            last = j == len(arcs[a]) - 1
            seg = [ring[(pos + x) % R] for x in range(g + 1)]
            if last:
                faces.append([t[a]] + seg + [t[(a + 1) % 3]])
            else:
                faces.append([t[a]] + seg)
            pos += g
    return faces


def orient_faces(faces):
    """Reverse walks as needed so every edge is used once in each direction.

    Faces are visited breadth-first across shared edges starting from the
    first one, which keeps its orientation.
    """
    faces = [list(f) for f in faces]
    by_edge = {}
    for i, f in enumerate(faces):
        for a, b in zip(f, f[1:] + f[:1]):
            by_edge.setdefault(frozenset((a, b)), []).append(i)
    done = {0}
    todo = [0]
    while todo:
        i = todo.pop()
        f = faces[i]
        for a, b in zip(f, f[1:] + f[:1]):
            for j in by_edge[frozenset((a, b))]:
                if j == i or j in done:
                    continue
                g = faces[j]
                darts = set(zip(g, g[1:] + g[:1]))
                if (a, b) in darts:
                    faces[j] = g[::-1]
                done.add(j)
                todo.append(j)
    if len(done) != len(faces):
        raise PaddingError("faces do not form one connected surface")
    return faces


def from_named_faces(faces, outer=0):
    """Plane graph from faces given as vertex-name lists.

    Vertex ids follow first appearance.  Returns (graph, name -> id).
    """
    ids = {}
    for f in faces:
        for x in f:
            ids.setdefault(x, len(ids))
    walks = orient_faces([[ids[x] for x in f] for f in faces])
    return PlaneGraph.from_faces(walks, outer), ids
