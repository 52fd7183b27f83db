"""Reducibility: ordering conditions, paired extension and a stub-model oracle.

A configuration K sits in a host where vertex ``v`` has ``stubs(v) =
d_G(v) - d_K(v)`` external neighbours.  A precoloured external neighbour is
joined to at most one cover vertex of ``L_v`` (matchings), so the adversary
is a set of single-unit capacity decrements, at most one per stub.
"""

from __future__ import annotations

import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import patterns
from .cover import Cover, WeightFn, is_strictly_f_degenerate, make_kernel, spanning_forest
from .kernel import EDGE, VERTEX, Kernel, OptionTable


class ReduceError(ValueError):
    pass


class NotInduced(ReduceError):
    pass


class OrderNotBijective(ReduceError):
    pass


class ConditionsNotChecked(ReduceError):
    pass


# configuration model --------------------------------------------------------------


@dataclass(frozen=True)
class ConfigModel:
    """K as names, edges (index pairs) and host degrees ``d_G``."""

    names: tuple
    edges: tuple
    host_degree: tuple
    source: str = ""

    @classmethod
    def from_pattern(cls, pid, degree_override=None, extra_edges=()):
        """K from a library pattern; ``extra_edges`` (name pairs) are added."""
        p = patterns.get(pid)
        keep = p.marked
        ix = {old: new for new, old in enumerate(keep)}
        names = tuple(p.names[i] for i in keep)
        es = {(min(ix[a], ix[b]), max(ix[a], ix[b])) for a, b in p.k_edges}
        for a, b in extra_edges:
            i, j = names.index(a), names.index(b)
            es.add((min(i, j), max(i, j)))
        edges = tuple(sorted(es))
        deg = [p.degree[i] for i in keep]
        for name, d in (degree_override or {}).items():
            deg[names.index(name)] = d
        return cls(names, edges, tuple(deg), pid)

    @classmethod
    def from_host(cls, G, vertices, edges=None, names=None):
        """K given by host vertex ids; ``edges`` (host ids) must be induced."""
        vs = list(vertices)
        if len(set(vs)) != len(vs):
            raise OrderNotBijective("repeated vertex in K")
        ix = {v: i for i, v in enumerate(vs)}
        induced = {(min(ix[u], ix[v]), max(ix[u], ix[v])) for u, v in G.edges if u in ix and v in ix}
        if edges is not None:
            given = {(min(ix[u], ix[v]), max(ix[u], ix[v])) for u, v in edges}
            if given != induced:
                raise NotInduced(f"K misses host edges {sorted(induced - given)}")
        names = tuple(names) if names else tuple(str(v) for v in vs)
        return cls(names, tuple(sorted(induced)), tuple(G.degree(v) for v in vs), "host")

    @property
    def m(self):
        return len(self.names)

    @property
    def adj(self):
        out = [set() for _ in self.names]
        for a, b in self.edges:
            out[a].add(b)
            out[b].add(a)
        return out

    def stubs(self, i):
        return self.host_degree[i] - len(self.adj[i])

    def index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise OrderNotBijective(f"{name} is not a vertex of K") from None


# ordering conditions ---------------------------------------------------------------------


@dataclass
class WWResult:
    ok: bool
    model: ConfigModel
    order: tuple
    pairs: tuple
    k: int
    violation: tuple = None  # (condition, vertex name, detail)
    back: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "ok": self.ok,
            "order": [self.model.names[i] for i in self.order],
            "pairs": [[self.model.names[a], self.model.names[b]] for a, b in self.pairs],
            "k": self.k,
            "violation": list(self.violation) if self.violation else None,
            "back": dict(self.back),
        }


def _resolve(model, seq):
    return tuple(model.index(x) if isinstance(x, str) else int(x) for x in seq)


def check_ww_conditions(model, order, pairs=None, k=4):
    """Evaluate the ordering conditions for ``order`` with nested ``pairs``.

    With a single pair ``(v1, vm)`` these are the literal conditions
    (i) fewer stubs at v1 than at vm, (ii) ``d_G(vm) <= k`` and
    ``v1 vm`` an edge, (iii) every other vertex has at most ``k - 1``
    neighbours outside the later vertices.  With several pairs ``(a, b)``
    the first vertex must see fewer blocked colours than ``b`` has when
    ``a`` is coloured, which is (i) when ``a = v1`` and ``b = vm``.
    """
    if isinstance(model, str):
        model = ConfigModel.from_pattern(model)
    order = _resolve(model, order)
    if sorted(order) != list(range(model.m)):
        raise OrderNotBijective("order must list every vertex of K exactly once")
    if pairs is None:
        pairs = [(order[0], order[-1])]
    pairs = tuple(_resolve(model, p) for p in pairs)
    pos = {v: t for t, v in enumerate(order)}
    adj = model.adj
    names = model.names

    def back_before(v, t):
        return model.stubs(v) + sum(1 for u in adj[v] if pos[u] < t)

    back = {names[v]: back_before(v, pos[v]) for v in order}
    res = WWResult(True, model, order, pairs, k, None, back)

    def fail(cond, v, detail):
        res.ok = False
        res.violation = (cond, names[v], detail)
        return res

    firsts = {a for a, _ in pairs}
    seconds = {b for _, b in pairs}
    if len(firsts | seconds) != 2 * len(pairs):
        return fail("pairs", pairs[0][0], "a vertex lies in two pairs")
    spans = sorted((pos[a], pos[b]) for a, b in pairs)
    for (a1, b1), (a2, b2) in zip(spans, spans[1:]):
        if not (a1 < a2 and b2 < b1):
            return fail("nested", order[a2], "pairs are not nested")
    for a, b in pairs:
        if pos[a] >= pos[b]:
            return fail("pairs", a, "paired vertex comes after its partner")
        if b == order[-1] and model.host_degree[b] > k:
            return fail("ii", b, f"d_G = {model.host_degree[b]} > {k}")
        if b not in adj[a]:
            return fail("ii", b, f"{names[a]}{names[b]} is not an edge")
        if back[names[b]] > k:
            return fail("ii", b, f"{back[names[b]]} neighbours before it > {k}")
        lhs = back[names[a]]
        rhs = back_before(b, pos[a])
        if not lhs < rhs:
            return fail("i", a, f"{k - lhs} free colours at {names[a]} vs {k - rhs} at {names[b]}")
    for v in order:
        if v in seconds:
            continue
        if back[names[v]] > k - 1:
            return fail("iii", v, f"{back[names[v]]} neighbours outside later vertices > {k - 1}")
    return res


def find_order(model, k=4, max_pairs=3):
    """Some ordering with at most ``max_pairs`` nested pairs, or None.

    Orders are built from the back: the vertex placed last among the
    remaining set ``R`` sees ``stubs + |N(v) & R|`` before it.
    """
    if isinstance(model, str):
        model = ConfigModel.from_pattern(model)
    adj = model.adj
    m = model.m
    failed = set()

    def rec(R, pending, used):
        # pending: tuple of (a, b) pairs whose first vertex is still unplaced;
        # returns list of vertices from first to last among R, and pairs
        if not R:
            return ([], []) if not pending else None
        key = (R, pending, used)
        if key in failed:
            return None
        open_a = {a for a, _ in pending}
        # nesting: only the innermost pending pair's first vertex may close next
        inner = pending[-1] if pending else None
        for v in sorted(R):
            rest = R - {v}
            b_v = model.stubs(v) + len(adj[v] & rest)
            if v in open_a:
                if v != inner[0]:
                    continue
                b = inner[1]
                rhs = model.stubs(b) + len(adj[b] & rest)
                if not b_v < rhs:
                    continue
                got = rec(rest, pending[:-1], used)
                if got is not None:
                    return got[0] + [v], got[1] + [(v, b)]
                continue
            if b_v <= k - 1:
                got = rec(rest, pending, used)
                if got is not None:
                    return got[0] + [v], got[1]
            if used < max_pairs and b_v <= k:
                for a in sorted(adj[v] & rest):
                    if a in open_a:
                        continue
                    got = rec(rest, pending + ((a, v),), used + 1)
                    if got is not None:
                        return got[0] + [v], got[1]
        failed.add(key)
        return None

    got = rec(frozenset(range(m)), (), 0)
    if got is None:
        return None
    order, prs = got
    res = check_ww_conditions(model, order, prs or [], k) if prs else None
    if res is None:
        # no pair needed: every vertex already has a free colour
        res = WWResult(True, model, tuple(order), (), k, None,
                       {model.names[v]: model.stubs(v) + sum(1 for u in adj[v] if order.index(u) < order.index(v))
                        for v in order})
    assert res.ok, res.violation
    return res


# paired extension ------------------------------------------------------------------------


@dataclass
class PairedResult:
    transversal: list
    stalled_at: str = None
    fallback: bool = False


def paired_extension(cover, f, ww):
    """Colour K along the checked order, saving colours for paired vertices.

    ``f`` is the weight after stub decrements.  Each vertex takes a colour
    whose blocked count is below its weight; the first vertex of a pair
    picks the colour that leaves the most capacity at its partner.  If the
    greedy stalls, full backtracking takes over and the stall is reported.
    """
    if not isinstance(ww, WWResult) or not ww.ok:
        raise ConditionsNotChecked("run check_ww_conditions first and pass its result")
    n, s = cover.n, cover.s
    maps = {}
    for u, v in cover.edges:
        maps[(u, v)] = cover.color_map(u, v)
        maps[(v, u)] = cover.color_map(v, u)
    nbrs = [[] for _ in range(n)]
    for u, v in cover.edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    blocked = [[0] * s for _ in range(n)]
    partner = {a: b for a, b in ww.pairs}
    picks = [-1] * n
    placed = set()

    def room(v):
        return sum(max(0, f(v, j) - blocked[v][j]) for j in range(s))

    for v in ww.order:
        cands = [c for c in range(s) if f(v, c) > 0 and blocked[v][c] < f(v, c)]
        if not cands:
            T = make_kernel(cover, f).solve()
            if T is not None:
                assert is_strictly_f_degenerate(cover, f, T)
            return PairedResult(T, ww.model.names[v], True)

        def cost(c):
            later = [u for u in nbrs[v] if u not in placed]
            hit = 0
            for u in later:
                j = maps[(v, u)][c]
                if j >= 0 and blocked[u][j] < f(u, j):
                    hit += 1
            if v in partner:
                b = partner[v]
                j = maps[(v, b)][c]
                keep = room(b) - (1 if j >= 0 and blocked[b][j] < f(b, j) else 0)
                return (-keep, hit, c)
            return (0, hit, c)

        c = min(cands, key=cost)
        picks[v] = c
        placed.add(v)
        for u in nbrs[v]:
            j = maps[(v, u)][c]
            if j >= 0:
                blocked[u][j] += 1
    assert is_strictly_f_degenerate(cover, f, picks)
    return PairedResult(picks)


# oracle -------------------------------------------------------------------------------------


BOUNDARY_F = tuple(
    sorted({p for base in ((2, 2, 0, 0), (2, 1, 1, 0), (1, 1, 1, 1)) for p in itertools.permutations(base)})
)


def f_family(name, s=4):
    if name == "ones":
        return [(1,) * s]
    if name == "boundary":
        if s != 4:
            raise ReduceError("the boundary family is defined for s = 4")
        return list(BOUNDARY_F)
    raise ReduceError(f"unknown f family {name!r}")


def decrements(fvec, stubs):
    """All weight vectors left after ``stubs`` unit decrements (maximal harm)."""
    total = min(stubs, sum(fvec))
    out = set()
    s = len(fvec)

    def rec(i, left, cur):
        if i == s:
            if left == 0:
                out.add(tuple(cur))
            return
        for d in range(min(left, fvec[i]) + 1):
            cur.append(fvec[i] - d)
            rec(i + 1, left - d, cur)
            cur.pop()

    rec(0, total, [])
    return sorted(out)


@dataclass
class Instance:
    """Options for one oracle run over K's cover."""

    model: ConfigModel
    s: int
    mode: str
    table: OptionTable
    edge_vars: list  # (edge index, options) in table order
    vertex_prov: list  # per vertex: list of (f, effective f)

    def kernel(self):
        k = Kernel(self.model.m, self.s, list(self.model.edges))
        ident = list(range(self.s))
        for e in range(len(self.model.edges)):
            k.set_matching(e, ident)
        return k

    def witness(self, digits, pre=None):
        s = self.s
        maps = {e: list(range(s)) for e in range(len(self.model.edges))}
        prov = [self.vertex_prov[v][0] for v in range(self.model.m)]
        for t, d in enumerate(digits):
            var = self.table.vars[t]
            if self.table.kinds[t] == EDGE:
                maps[var] = self.table.options[t][d]
            else:
                prov[var] = self.vertex_prov[var][d]
        names = self.model.names
        matchings = []
        for e, (u, v) in enumerate(self.model.edges):
            pairs = sorted([i + 1, j + 1] for i, j in enumerate(maps[e]) if j >= 0)
            matchings.append({"u": names[u], "v": names[v], "pairs": pairs})
        return {
            "pattern": self.model.source,
            "names": list(names),
            "edges": [[names[u], names[v]] for u, v in self.model.edges],
            "host_degree": list(self.model.host_degree),
            "s": s,
            "mode": self.mode,
            "matchings": matchings,
            "f": [list(b) for b, _ in prov],
            "stub_decrements": [[x - y for x, y in zip(b, e)] for b, e in prov],
            "effective_f": [list(e) for _, e in prov],
            "precolored": pre,
        }


def _injections(a, b, s):
    """Colour maps sending ``[a]`` injectively into ``[b]`` (padded to s)."""
    out = []
    for img in itertools.permutations(range(b), a):
        out.append(list(img) + [-1] * (s - a))
    return out


def build_instance(model, s=4, f="ones", mode="reduced"):
    """Option table for K.

    ``reduced`` (f ones only): stubs shrink each list to ``l = s - stubs``
    colours; tree edges are gauge fixed (identity, or an increasing
    injection when the child list is shorter) and other edges run over all
    maximum injections.  ``literal``: full permutations on non-tree edges,
    every weight in the family and every maximal stub decrement.
    """
    if isinstance(model, str):
        model = ConfigModel.from_pattern(model)
    m = model.m
    edges = list(model.edges)
    eindex = {e: i for i, e in enumerate(edges)}
    table = OptionTable(s)
    prov = []
    edge_vars = []
    if mode == "reduced":
        if f != "ones":
            raise ReduceError("reduced mode is for f = ones")
        ell = [max(0, s - model.stubs(v)) for v in range(m)]
        root_order, tree, rest, parent = _best_gauge(m, edges, ell)
        for v in range(m):
            vec = tuple([1] * ell[v] + [0] * (s - ell[v]))
            prov.append([(tuple([1] * s), vec)])
            table.add(VERTEX, v, [vec])
        for (u, v) in tree:
            p, c = (u, v) if parent.get(v) == u else (v, u)
            if ell[c] >= ell[p]:
                opts = [list(range(ell[p])) + [-1] * (s - ell[p])]
            else:
                opts = []
                for S in itertools.combinations(range(ell[p]), ell[c]):
                    mp = [-1] * s
                    for j, i in enumerate(S):
                        mp[i] = j
                    opts.append(mp)
            opts = [_orient(o, p, c, u, v, s) for o in opts]
            table.add(EDGE, eindex[(u, v)], opts)
            edge_vars.append(eindex[(u, v)])
        for (u, v) in rest:
            if ell[u] <= ell[v]:
                opts = _injections(ell[u], ell[v], s)
            else:
                opts = [_invert(o, s) for o in _injections(ell[v], ell[u], s)]
            table.add(EDGE, eindex[(u, v)], opts)
            edge_vars.append(eindex[(u, v)])
    elif mode == "literal":
        fam = f_family(f, s)
        tree, rest = spanning_forest(m, edges)
        for v in range(m):
            seen = {}
            for base in fam:
                for eff in decrements(base, model.stubs(v)):
                    seen.setdefault(eff, (base, eff))
            prov.append(list(seen.values()))
            table.add(VERTEX, v, list(seen))
        perms = [list(p) for p in itertools.permutations(range(s))]
        for e in rest:
            table.add(EDGE, eindex[e], perms)
            edge_vars.append(eindex[e])
    else:
        raise ReduceError(f"unknown mode {mode!r}")
    return Instance(model, s, mode, table, edge_vars, prov)


def _gauge_size(tree, rest, parent, ell):
    size = 1
    for u, v in tree:
        p, c = (u, v) if parent.get(v) == u else (v, u)
        if ell[c] < ell[p]:
            size *= math.comb(ell[p], ell[c])
    for u, v in rest:
        a, b = sorted((ell[u], ell[v]))
        size *= math.perm(b, a)
    return size


def _best_gauge(m, edges, ell):
    """BFS gauge tree whose root gives the fewest reduced instances."""
    best = None
    for r in range(m):
        roots = [r] + [v for v in sorted(range(m), key=lambda v: (-ell[v], v)) if v != r]
        tree, rest = spanning_forest(m, edges, roots)
        parent = _parents(m, tree, roots)
        size = _gauge_size(tree, rest, parent, ell)
        if best is None or size < best[0]:
            best = (size, roots, tree, rest, parent)
    return best[1:]


def _parents(m, tree, roots):
    adj = [[] for _ in range(m)]
    for u, v in tree:
        adj[u].append(v)
        adj[v].append(u)
    parent = {}
    seen = set()
    for r in roots:
        if r in seen:
            continue
        seen.add(r)
        q = [r]
        for x in q:
            for y in sorted(adj[x]):
                if y not in seen:
                    seen.add(y)
                    parent[y] = x
                    q.append(y)
    return parent


def _invert(mp, s):
    out = [-1] * s
    for i, j in enumerate(mp):
        if j >= 0:
            out[j] = i
    return out


def _orient(mp, p, c, u, v, s):
    """``mp`` maps p-colours to c-colours; return it as a u->v map."""
    return mp if p == u else _invert(mp, s)


@dataclass
class Verdict:
    verdict: str  # REDUCIBLE | COUNTEREXAMPLE | EXHAUSTED
    pattern: str
    checked: int
    total: int
    mode: str
    f: str
    s: int
    witness: dict = None
    paired: dict = None

    def to_json(self):
        out = {
            "verdict": self.verdict,
            "pattern": self.pattern,
            "checked": self.checked,
            "total": self.total,
            "mode": self.mode,
            "f": self.f,
            "s": self.s,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.paired is not None:
            out["paired"] = self.paired
        return out


def _decode(counts, idx):
    """Mixed-radix digits (first fastest) for an array of indices."""
    idx = np.asarray(idx, dtype=np.int64)
    cols = []
    for c in counts:
        cols.append(idx % c)
        idx = idx // c
    return np.stack(cols, axis=1).astype(np.intc) if cols else np.zeros((len(idx), 0), np.intc)


def _run_rows(inst, rows):
    k = inst.kernel()
    checked, fail, pre = inst.table.batch_search(k, rows)
    return checked, fail, pre


def _chunk_worker(args):
    model, s, f, mode, lo, hi = args
    inst = build_instance(model, s, f, mode)
    rows = _decode(inst.table.counts, np.arange(lo, hi, dtype=np.int64))
    checked, fail, pre = _run_rows(inst, rows)
    if fail >= 0:
        return checked, lo + fail, pre
    return checked, -1, None


def reducible_oracle(pattern_id, s=4, f="ones", budget=10**6, seed=None, mode="auto",
                     jobs=1, degree_override=None, samples=None, chunk=50_000, extra_edges=()):
    """REDUCIBLE, COUNTEREXAMPLE (with witness) or EXHAUSTED.

    ``pattern_id`` is a library id or a ConfigModel.  ``mode='auto'`` is
    exhaustive (reduced for f ones, literal otherwise) when the instance
    count fits the budget and seeded sampling otherwise; ``'literal'``
    forces exhaustive enumeration of the literal model.
    """
    if isinstance(pattern_id, ConfigModel):
        model = pattern_id
        pattern_id = model.source or "custom"
    else:
        extra = tuple(tuple(e) for e in extra_edges)
        model = ConfigModel.from_pattern(pattern_id, degree_override, extra)
    table_mode = "reduced" if f == "ones" else "literal"
    if mode == "literal":
        mode, table_mode = "exhaustive", "literal"
    if mode == "auto":
        inst = build_instance(model, s, f, table_mode)
        mode = "exhaustive" if inst.table.size <= budget else "sampled"
    if mode == "exhaustive":
        inst = build_instance(model, s, f, table_mode)
        total = inst.table.size
        label = "exhaustive" if table_mode == "reduced" else "literal"

        def verdict(v, checked, witness=None):
            return Verdict(v, pattern_id, checked, total, label, f, s, witness=witness)

        if total > budget:
            return verdict("EXHAUSTED", 0)
        if jobs <= 1:
            checked, fail, pre = inst.table.product_search(inst.kernel(), total)
            if fail >= 0:
                return verdict("COUNTEREXAMPLE", checked, inst.witness(inst.table.digits(fail), pre))
            return verdict("REDUCIBLE", checked)
        chunks = [(model, s, f, table_mode, lo, min(total, lo + chunk)) for lo in range(0, total, chunk)]
        checked = 0
        for c, fail, pre in _map(_chunk_worker, chunks, jobs):
            checked += c
            if fail >= 0:
                return verdict("COUNTEREXAMPLE", checked, inst.witness(inst.table.digits(fail), pre))
        return verdict("REDUCIBLE", checked)
    if mode == "sampled":
        if seed is None:
            raise ReduceError("sampling needs a seed")
        inst = build_instance(model, s, f, "literal")
        n = samples if samples is not None else budget
        rng = np.random.default_rng(seed)
        rows = np.stack([rng.integers(0, c, size=n) for c in inst.table.counts], axis=1).astype(np.intc)
        k = inst.kernel()
        checked = 0
        for lo in range(0, n, chunk):
            part = rows[lo:lo + chunk]
            c, fail, pre = inst.table.batch_search(k, part)
            checked += c
            if fail >= 0:
                return Verdict("COUNTEREXAMPLE", pattern_id, checked, n, "sampled", f, s,
                               witness=inst.witness([int(x) for x in part[fail]], pre))
        return Verdict("REDUCIBLE", pattern_id, checked, n, "sampled", f, s)
    raise ReduceError(f"unknown mode {mode!r}")


def _map(fn, items, jobs):
    if jobs <= 1 or len(items) <= 1:
        for it in items:
            yield fn(it)
        return
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        yield from ex.map(fn, items)


def replay(witness):
    """Re-check a witness; returns the verdict string it reproduces."""
    if isinstance(witness, (str, bytes)):
        witness = json.loads(witness)
    names = witness["names"]
    ix = {x: i for i, x in enumerate(names)}
    edges = [(ix[a], ix[b]) for a, b in witness["edges"]]
    ms = {}
    for m in witness["matchings"]:
        ms[(ix[m["u"]], ix[m["v"]])] = [(i - 1, j - 1) for i, j in m["pairs"]]
    cover = Cover.build(len(names), witness["s"], ms, edges)
    f = WeightFn.of(witness["effective_f"])
    for base, dec, eff in zip(witness["f"], witness["stub_decrements"], witness["effective_f"]):
        if [b - d for b, d in zip(base, dec)] != list(eff):
            raise ReduceError("effective weights do not match f minus decrements")
    for v, dec in enumerate(witness["stub_decrements"]):
        if sum(dec) > witness["host_degree"][v] - sum(1 for e in edges if v in e):
            raise ReduceError(f"more decrements than stubs at {names[v]}")
    T = make_kernel(cover, f).solve()
    return "REDUCIBLE" if T is not None else "COUNTEREXAMPLE"


def compare_paired(pattern_id, ww, s=4, f="ones", samples=1000, seed=0):
    """Run paired_extension and backtracking on sampled literal instances."""
    model = ww.model
    inst = build_instance(model, s, f, "literal")
    rng = np.random.default_rng(seed)
    stats = {"instances": 0, "both": 0, "greedy": 0, "fallback": 0, "disagree": 0}
    k = inst.kernel()
    for _ in range(samples):
        digits = [int(rng.integers(0, c)) for c in inst.table.counts]
        inst.table.apply(k, digits)
        T = k.solve()
        w = inst.witness(digits)
        ms = {(i, j): [] for i, j in model.edges}
        for mm, (u, v) in zip(w["matchings"], model.edges):
            ms[(u, v)] = [(a - 1, b - 1) for a, b in mm["pairs"]]
        cover = Cover.build(model.m, s, ms, model.edges)
        fw = WeightFn.of(w["effective_f"])
        got = paired_extension(cover, fw, ww)
        stats["instances"] += 1
        if (T is None) != (got.transversal is None):
            stats["disagree"] += 1
        elif T is not None:
            stats["both"] += 1
        if got.fallback:
            stats["fallback"] += 1
        else:
            stats["greedy"] += 1
    return stats


def exhaustive_size(pattern_id, s=4):
    inst = build_instance(pattern_id, s, "ones", "reduced")
    return inst.table.size


def literal_size(pattern_id, s=4, f="ones"):
    inst = build_instance(pattern_id, s, f, "literal")
    return inst.table.size


__all__ = [
    "ConfigModel", "WWResult", "check_ww_conditions", "find_order", "paired_extension",
    "reducible_oracle", "replay", "Verdict", "decrements", "f_family", "build_instance",
    "NotInduced", "OrderNotBijective", "ConditionsNotChecked",
]
