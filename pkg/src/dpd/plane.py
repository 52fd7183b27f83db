"""Plane graphs described by rotation systems.

A plane graph is given combinatorially: for every vertex the cyclic order of
its neighbours.  Faces are traced from darts with the rule "next dart =
reverse, then successor in rotation", and planarity is certified by Euler's
formula on the traced face count.
"""

from __future__ import annotations

import json
import warnings
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations


class PlaneGraphError(ValueError):
    """Base class for rejected embeddings."""


class NonSimple(PlaneGraphError):
    pass


class Disconnected(PlaneGraphError):
    pass


class EulerViolation(PlaneGraphError):
    pass


class UnknownOuterFace(PlaneGraphError):
    pass


@dataclass(frozen=True)
class Face:
    id: int
    boundary: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.boundary)

    def edges(self):
        b = self.boundary
        return [(b[i], b[(i + 1) % len(b)]) for i in range(len(b))]


@dataclass(frozen=True)
class VertexStats:
    degree: int
    is_internal: bool
    t: int


def _cyclic_equal(a, b):
    if len(a) != len(b):
        return False
    if not a:
        return True
    n = len(a)
    for shift in range(n):
        if all(a[(i + shift) % n] == b[i] for i in range(n)):
            return True
    return False


class PlaneGraph:
    """Immutable plane graph; build with ``PlaneGraph(n, rotations, outer_face)``.

    ``outer_face`` is the boundary walk of the outer face D (either
    orientation) or the integer id of a traced face.
    """

    def __init__(self, n, rotations, outer_face):
        self.n = int(n)
        if len(rotations) != self.n:
            raise NonSimple(f"expected {self.n} rotations, got {len(rotations)}")
        self.rotations = tuple(tuple(int(u) for u in rot) for rot in rotations)
        self._check_simple()
        self._check_connected()
        self._pos = [{u: i for i, u in enumerate(rot)} for rot in self.rotations]
        self._trace()
        m = len(self.edges)
        if self.n - m + len(self.faces) != 2:
            raise EulerViolation(
                f"V - E + F = {self.n} - {m} + {len(self.faces)} != 2"
            )
        self.outer = self._bind_outer(outer_face)

    # construction ---------------------------------------------------------

    def _check_simple(self):
        edges = set()
        for v, rot in enumerate(self.rotations):
            if len(set(rot)) != len(rot):
                raise NonSimple(f"repeated neighbour in rotation of {v}")
            for u in rot:
                if u == v:
                    raise NonSimple(f"loop at {v}")
                if not 0 <= u < self.n:
                    raise NonSimple(f"neighbour {u} of {v} out of range")
                if v not in self.rotations[u]:
                    raise NonSimple(f"one-sided adjacency {v}->{u}")
                edges.add((min(u, v), max(u, v)))
        self.edges = tuple(sorted(edges))

    def _check_connected(self):
        if self.n == 0:
            raise Disconnected("empty graph")
        seen = {0}
        todo = [0]
        while todo:
            v = todo.pop()
            for u in self.rotations[v]:
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
        if len(seen) != self.n:
            raise Disconnected(f"{self.n - len(seen)} vertices unreachable from 0")

    def succ(self, v, u):
        """Neighbour of ``v`` following ``u`` in the rotation at ``v``."""
        rot = self.rotations[v]
        return rot[(self._pos[v][u] + 1) % len(rot)]

    def _trace(self):
        dart_face = {}
        faces = []
        for v, rot in enumerate(self.rotations):
            for u in rot:
                if (v, u) in dart_face:
                    continue
                fid = len(faces)
                walk = []
                a, b = v, u
                while (a, b) not in dart_face:
                    dart_face[(a, b)] = fid
                    walk.append(a)
                    a, b = b, self.succ(b, a)
                faces.append(Face(fid, tuple(walk)))
        if self.n == 1:
            faces.append(Face(0, (0,)))
        self.faces = tuple(faces)
        self._dart_face = dart_face

    def _bind_outer(self, outer_face):
        if isinstance(outer_face, int):
            if 0 <= outer_face < len(self.faces):
                return outer_face
            raise UnknownOuterFace(f"no face with id {outer_face}")
        walk = tuple(int(x) for x in outer_face)
        # an exact orientation wins: on a bare cycle both faces share the walk
        for w in (walk, tuple(reversed(walk))):
            for f in self.faces:
                if _cyclic_equal(f.boundary, w):
                    return f.id
        raise UnknownOuterFace(f"walk {list(walk)} is not a traced face")

    @classmethod
    def from_faces(cls, faces, outer):
        """Build from a consistently oriented list of face boundary walks.

        In every face ``(..., u, v, w, ...)`` the neighbour ``w`` follows ``u``
        in the rotation at ``v``.  ``outer`` is an index into ``faces``.
        """
        succ = {}
        n = 0
        for walk in faces:
            k = len(walk)
            for i in range(k):
                u, v, w = walk[i - 1], walk[i], walk[(i + 1) % k]
                n = max(n, v + 1)
                if (v, u) in succ:
                    raise NonSimple(f"dart {u}->{v} used twice")
                succ[(v, u)] = w
        nbrs = [[] for _ in range(n)]
        for (v, u) in succ:
            nbrs[v].append(u)
        rotations = []
        for v in range(n):
            if not nbrs[v]:
                raise Disconnected(f"vertex {v} lies on no face")
            start = min(nbrs[v])
            rot = [start]
            while True:
                nxt = succ[(v, rot[-1])]
                if nxt == start:
                    break
                if nxt in rot:
                    raise NonSimple(f"faces around {v} do not close up")
                rot.append(nxt)
            if len(rot) != len(nbrs[v]):
                raise NonSimple(f"faces around {v} form several fans")
            rotations.append(rot)
        return cls(n, rotations, list(faces[outer]))

    # serialisation --------------------------------------------------------

    def to_json(self):
        return {
            "n": self.n,
            "rotations": [list(r) for r in self.rotations],
            "outer_face": list(self.faces[self.outer].boundary),
        }

    @classmethod
    def from_json(cls, data):
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        extra = set(data) - {"n", "rotations", "outer_face"}
        if extra:
            warnings.warn(f"ignoring unknown graph keys: {sorted(extra)}")
        try:
            return cls(data["n"], data["rotations"], data["outer_face"])
        except KeyError as exc:
            raise PlaneGraphError(f"missing key {exc}") from None

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def dump(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh)
            fh.write("\n")

    # queries ----------------------------------------------------------------

    def degree(self, v) -> int:
        return len(self.rotations[v])

    def neighbors(self, v):
        return self.rotations[v]

    @cached_property
    def adjacency(self):
        return tuple(frozenset(r) for r in self.rotations)

    def has_edge(self, u, v) -> bool:
        return v in self.adjacency[u]

    @cached_property
    def outer_vertices(self) -> frozenset:
        return frozenset(self.faces[self.outer].boundary)

    def is_internal(self, v) -> bool:
        return v not in self.outer_vertices

    def is_bounded(self, f) -> bool:
        return f != self.outer

    def is_internal_face(self, f) -> bool:
        """Bounded and sharing no vertex with the outer face."""
        if f == self.outer:
            return False
        return not (set(self.faces[f].boundary) & self.outer_vertices)

    def face_of_dart(self, u, v) -> int:
        return self._dart_face[(u, v)]

    def edge_faces(self, u, v):
        """The two faces on either side of edge uv (equal for a bridge)."""
        return self._dart_face[(u, v)], self._dart_face[(v, u)]

    def faces_incident(self, v):
        """Faces around ``v`` in rotation order, one per angle."""
        if self.n == 1:
            return [0]
        return [self._dart_face[(v, u)] for u in self.rotations[v]]

    def adjacent_faces(self, f):
        """Faces other than ``f`` sharing at least one edge with ``f``."""
        out = set()
        for u, v in self.faces[f].edges():
            g = self._dart_face[(v, u)]
            if g != f:
                out.add(g)
        return out

    def shared_edges(self, f, g):
        return [
            (u, v) for u, v in self.faces[f].edges() if self._dart_face[(v, u)] == g
        ]

    def stats(self, v) -> VertexStats:
        t = sum(1 for f in self.faces_incident(v) if self.faces[f].degree == 3)
        return VertexStats(self.degree(v), self.is_internal(v), t)

    def face_degree(self, f) -> int:
        return self.faces[f].degree

    def __repr__(self):
        return f"PlaneGraph(n={self.n}, m={len(self.edges)}, faces={len(self.faces)})"


def triangles(G):
    """All 3-cycles as sorted vertex triples."""
    adj = G.adjacency
    out = []
    for u, v in G.edges:
        for w in adj[u] & adj[v]:
            if w > v:
                out.append((u, v, w))
    return out


def separating_3_cycles(G):
    """3-cycles with vertices strictly on both sides.

    Returns ``(triangle, inside, outside)`` triples where ``outside`` is the
    side containing the outer face.
    """
    out = []
    for tri in triangles(G):
        cut = {(a, b) for a, b in combinations(tri, 2)}
        cut |= {(b, a) for a, b in cut}
        region = [-1] * len(G.faces)
        nreg = 0
        for start in range(len(G.faces)):
            if region[start] >= 0:
                continue
            region[start] = nreg
            todo = deque([start])
            while todo:
                f = todo.popleft()
                for u, v in G.faces[f].edges():
                    if (u, v) in cut:
                        continue
                    g = G.face_of_dart(v, u)
                    if region[g] < 0:
                        region[g] = nreg
                        todo.append(g)
            nreg += 1
        sides = [set() for _ in range(nreg)]
        for f in G.faces:
            for x in f.boundary:
                if x not in tri:
                    sides[region[f.id]].add(x)
        nonempty = [s for s in sides if s]
        if len(nonempty) >= 2:
            outer_reg = region[G.outer]
            outside = sides[outer_reg]
            inside = set().union(*(s for i, s in enumerate(sides) if i != outer_reg))
            out.append((tri, frozenset(inside), frozenset(outside)))
    return out
