"""DP-covers, weight functions and strictly f-degenerate transversals.

Colours are 0-based in memory and 1-based in JSON.  A transversal is a list
with one colour per vertex, ``-1`` marking an unchosen list.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass

from .kernel import EDGE, Kernel, OptionTable


class CoverError(ValueError):
    pass


class InvalidCover(CoverError):
    pass


class InvalidTransversal(CoverError):
    pass


class InvalidPartial(CoverError):
    pass


class TooLarge(CoverError):
    pass


class RaggedLists(CoverError):
    pass


def _norm(u, v):
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Cover:
    """Lists ``L_v = {v} x [s]`` with a partial matching per base edge.

    ``matchings[(u, v)]`` (``u < v``) is a frozenset of pairs ``(i, j)``
    meaning ``(u, i)`` is joined to ``(v, j)``.
    """

    n: int
    s: int
    edges: tuple
    matchings: dict

    def __post_init__(self):
        es = set(self.edges)
        for (u, v), pairs in self.matchings.items():
            if (u, v) not in es:
                raise InvalidCover(f"matching on non-edge {u}-{v}")
            left = [i for i, _ in pairs]
            right = [j for _, j in pairs]
            if len(set(left)) != len(left) or len(set(right)) != len(right):
                raise InvalidCover(f"pairs on {u}-{v} are not a matching")
            for i, j in pairs:
                if not (0 <= i < self.s and 0 <= j < self.s):
                    raise InvalidCover(f"colour out of range on {u}-{v}")

    @classmethod
    def build(cls, n, s, matchings, edges=None):
        """``matchings`` maps (u, v) to pairs in either edge orientation."""
        ms = {}
        for (u, v), pairs in matchings.items():
            if u > v:
                pairs = [(j, i) for i, j in pairs]
                u, v = v, u
            ms[(u, v)] = frozenset((int(i), int(j)) for i, j in pairs)
        if edges is None:
            edges = ms.keys()
        edges = tuple(sorted(_norm(u, v) for u, v in edges))
        for e in edges:
            ms.setdefault(e, frozenset())
        return cls(n, s, edges, ms)

    @classmethod
    def identity(cls, n, s, edges):
        return cls.build(n, s, {_norm(*e): [(i, i) for i in range(s)] for e in edges}, edges)

    def color_map(self, u, v):
        """List mapping each colour at ``u`` to its partner at ``v`` or -1."""
        a, b = _norm(u, v)
        out = [-1] * self.s
        for i, j in self.matchings[(a, b)]:
            if u == a:
                out[i] = j
            else:
                out[j] = i
        return out

    def matched(self, u, i, v, j) -> bool:
        return self.color_map(u, v)[i] == j

    def without_pair(self, edge, pair):
        ms = dict(self.matchings)
        ms[edge] = ms[edge] - {pair}
        return Cover(self.n, self.s, self.edges, ms)

    def to_json(self, f=None):
        out = {
            "s": self.s,
            "matchings": [
                {"u": u, "v": v, "pairs": sorted([i + 1, j + 1] for i, j in self.matchings[(u, v)])}
                for u, v in self.edges
            ],
        }
        if f is not None:
            out["f"] = [list(row) for row in f.values]
        return out

    @classmethod
    def from_json(cls, data, n=None, edges=None):
        """Cover and weight function from cover JSON."""
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        s = int(data["s"])
        ms = {}
        nmax = 0
        for m in data.get("matchings", []):
            u, v = int(m["u"]), int(m["v"])
            nmax = max(nmax, u + 1, v + 1)
            ms[(u, v)] = [(int(i) - 1, int(j) - 1) for i, j in m["pairs"]]
        if "f" in data:
            nmax = max(nmax, len(data["f"]))
        n = nmax if n is None else n
        cover = cls.build(n, s, ms, edges if edges is not None else list(ms))
        if "f" in data:
            f = WeightFn(tuple(tuple(int(x) for x in row) for row in data["f"]))
        else:
            f = WeightFn.ones(n, s)
        f.check(cover)
        return cover, f


@dataclass(frozen=True)
class WeightFn:
    values: tuple

    def __post_init__(self):
        for row in self.values:
            for x in row:
                if x not in (0, 1, 2):
                    raise InvalidCover(f"weight {x} outside {{0,1,2}}")

    @classmethod
    def ones(cls, n, s):
        return cls(tuple((1,) * s for _ in range(n)))

    @classmethod
    def of(cls, rows):
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    def __call__(self, v, i):
        return self.values[v][i]

    def list_sum(self, v) -> int:
        return sum(self.values[v])

    def eta(self) -> int:
        return min(self.list_sum(v) for v in range(len(self.values)))

    def check(self, cover):
        if len(self.values) != cover.n or any(len(r) != cover.s for r in self.values):
            raise InvalidCover("weight function shape does not match the cover")


def _check_transversal(cover, T):
    if len(T) != cover.n:
        raise InvalidTransversal(f"expected {cover.n} entries, got {len(T)}")
    for c in T:
        if isinstance(c, (list, tuple, set)):
            raise InvalidTransversal("two picks in one list")
        if not -1 <= c < cover.s:
            raise InvalidTransversal(f"colour {c} out of range")


def transversal_from_picks(n, picks):
    """Transversal list from (vertex, colour) picks; rejects double picks."""
    T = [-1] * n
    for v, c in picks:
        if T[v] >= 0:
            raise InvalidTransversal(f"two picks in L_{v}")
        T[v] = c
    return T


def induced_degrees(cover, T):
    """Degree of each picked cover vertex in H[T] (None for unpicked)."""
    deg = [None if c < 0 else 0 for c in T]
    for u, v in cover.edges:
        if T[u] >= 0 and T[v] >= 0 and (T[u], T[v]) in cover.matchings[(u, v)]:
            deg[u] += 1
            deg[v] += 1
    return deg


def is_strictly_f_degenerate(cover, f, T) -> bool:
    """Greedy elimination: peel picks whose current degree is below f."""
    _check_transversal(cover, T)
    nbrs = {v: [] for v in range(cover.n) if T[v] >= 0}
    for u, v in cover.edges:
        if T[u] >= 0 and T[v] >= 0 and (T[u], T[v]) in cover.matchings[(u, v)]:
            nbrs[u].append(v)
            nbrs[v].append(u)
    deg = {v: len(nb) for v, nb in nbrs.items()}
    todo = [v for v in nbrs if deg[v] < f(v, T[v])]
    gone = set(todo)
    while todo:
        v = todo.pop()
        for u in nbrs[v]:
            if u in gone:
                continue
            deg[u] -= 1
            if deg[u] < f(u, T[u]):
                gone.add(u)
                todo.append(u)
    return len(gone) == len(nbrs)


def make_kernel(cover, f=None):
    k = Kernel(cover.n, cover.s, list(cover.edges))
    for e, (u, v) in enumerate(cover.edges):
        k.set_matching(e, cover.color_map(u, v))
    if f is not None:
        for v in range(cover.n):
            k.set_f(v, f.values[v])
    return k


def extend_transversal(cover, f, partial=None):
    """Full strictly f-degenerate transversal extending ``partial`` or None."""
    if partial is None:
        partial = [-1] * cover.n
    _check_transversal(cover, partial)
    if not is_strictly_f_degenerate(cover, f, partial):
        raise InvalidPartial("the partial transversal is not strictly f-degenerate")
    out = make_kernel(cover, f).solve(list(partial))
    if out is not None:
        assert is_strictly_f_degenerate(cover, f, out)
    return out


# gauge fixing ------------------------------------------------------------------


def spanning_forest(n, edges, root_order=None):
    """Split edges into a BFS spanning forest and the remaining edges."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    tree = set()
    for r in root_order or range(n):
        if seen[r]:
            continue
        seen[r] = True
        q = [r]
        for x in q:
            for y in sorted(adj[x]):
                if not seen[y]:
                    seen[y] = True
                    tree.add(_norm(x, y))
                    q.append(y)
    es = [_norm(u, v) for u, v in edges]
    return [e for e in es if e in tree], [e for e in es if e not in tree]


def permutations(s):
    return [list(p) for p in itertools.permutations(range(s))]


def dp_chromatic(G, n_max_guard=10, max_covers=2_000_000):
    """Least k such that every perfect-matching cover with k colours is colourable.

    Matchings on a spanning forest are fixed to the identity (relabelling a
    list is a symmetry) and every permutation is tried on the other edges.
    Partial matchings are skipped since deleting cover edges never hurts.
    """
    n = G.n
    edges = [tuple(e) for e in G.edges]
    if n > n_max_guard:
        raise TooLarge(f"{n} vertices exceeds the guard of {n_max_guard}")
    tree, rest = spanning_forest(n, edges)
    k = 1
    while True:
        total = math.factorial(k) ** len(rest)
        if total > max_covers:
            raise TooLarge(f"{total} covers at k={k}")
        if _all_covers_colourable(n, k, edges, rest):
            return k
        k += 1


def _all_covers_colourable(n, k, edges, rest):
    ker = Kernel(n, k, edges)
    ident = list(range(k))
    index = {e: i for i, e in enumerate(edges)}
    for e in range(len(edges)):
        ker.set_matching(e, ident)
    if not rest:
        return ker.solve() is not None
    table = OptionTable(k)
    perms = permutations(k)
    for e in rest:
        table.add(EDGE, index[e], perms)
    _, fail, _ = table.product_search(ker, table.size)
    return fail < 0


def list_assignment_to_cover(lists, edges):
    """Cover (and weights) encoding a list assignment.

    ``(u, i)`` and ``(v, j)`` are joined when the i-th colour of ``L(u)``
    equals the j-th colour of ``L(v)``.  Ragged lists are padded to the
    longest one with weight-0 slots so padding can never be chosen.
    """
    n = len(lists)
    s = max((len(L) for L in lists), default=0)
    if s == 0:
        raise RaggedLists("all lists are empty")
    for L in lists:
        if len(set(L)) != len(L):
            raise RaggedLists(f"repeated colour in list {L}")
    ms = {}
    for u, v in edges:
        pos = {c: j for j, c in enumerate(lists[v])}
        ms[_norm(u, v)] = [
            (i, pos[c]) if u < v else (pos[c], i)
            for i, c in enumerate(lists[u])
            if c in pos
        ]
    cover = Cover.build(n, s, ms, edges)
    f = WeightFn.of([[1] * len(L) + [0] * (s - len(L)) for L in lists])
    return cover, f


def transversal_to_colouring(lists, T):
    return [lists[v][c] for v, c in enumerate(T)]
