"""Pure-Python search kernel.

Mirrors ``_core.pyx`` line for line so either backend can be selected at
import time.  Buffers are flat lists indexed as in the compiled core:
``mt[a*s + i]`` is the colour at the far end of adjacency slot ``a`` that is
matched to colour ``i`` at the near end (or -1), ``f[v*s + i]`` is the weight.
"""

from __future__ import annotations


class Kernel:
    backend = "python"

    def __init__(self, n, s, edges):
        self.n = n
        self.s = s
        self.edges = [tuple(e) for e in edges]
        nbrs = [[] for _ in range(n)]
        for e, (u, v) in enumerate(self.edges):
            nbrs[u].append((v, e))
            nbrs[v].append((u, e))
        self.ptr = [0]
        self.nb = []
        self.eid = []
        for v in range(n):
            for u, e in nbrs[v]:
                self.nb.append(u)
                self.eid.append(e)
            self.ptr.append(len(self.nb))
        self.slot = {}
        for v in range(n):
            for a in range(self.ptr[v], self.ptr[v + 1]):
                self.slot[(v, self.nb[a])] = a
        self.eslots = [(self.slot[(u, v)], self.slot[(v, u)]) for u, v in self.edges]
        self.mt = [-1] * (len(self.nb) * s)
        self.f = [1] * (n * s)
        self.picks = [-1] * n
        self.blocked = [0] * (n * s)
        self.blocked2 = [0] * (n * s)
        self.nodes = 0

    # buffers ------------------------------------------------------------------

    def set_matching(self, e, mapping):
        s = self.s
        a, b = self.eslots[e]
        mt = self.mt
        for i in range(s):
            mt[b * s + i] = -1
        for i in range(s):
            j = mapping[i]
            mt[a * s + i] = j
            if j >= 0:
                mt[b * s + j] = i

    def set_f(self, v, fvec):
        s = self.s
        for i in range(s):
            self.f[v * s + i] = fvec[i]

    def get_matching(self, e):
        a, _ = self.eslots[e]
        return self.mt[a * self.s:(a + 1) * self.s]

    # strict degeneracy ----------------------------------------------------------

    def _sfd(self, picks):
        s, mt, f, nb, ptr = self.s, self.mt, self.f, self.nb, self.ptr
        deg = [0] * self.n
        alive = [False] * self.n
        stack = []
        for v in range(self.n):
            c = picks[v]
            if c < 0:
                continue
            alive[v] = True
            d = 0
            for a in range(ptr[v], ptr[v + 1]):
                u = nb[a]
                if picks[u] >= 0 and mt[a * s + c] == picks[u]:
                    d += 1
            deg[v] = d
            if d < f[v * s + c]:
                stack.append(v)
        removed = set(stack)
        left = sum(alive) - len(removed)
        while stack:
            v = stack.pop()
            c = picks[v]
            for a in range(ptr[v], ptr[v + 1]):
                u = nb[a]
                if alive[u] and u not in removed and mt[a * s + c] == picks[u]:
                    deg[u] -= 1
                    if deg[u] < f[u * s + picks[u]]:
                        removed.add(u)
                        stack.append(u)
                        left -= 1
        return left == 0

    def is_sfd(self, picks):
        return self._sfd(list(picks))

    # backtracking ----------------------------------------------------------------

    def _place(self, v, c, delta):
        s, mt, nb = self.s, self.mt, self.nb
        two = self.f[v * s + c] >= 2
        for a in range(self.ptr[v], self.ptr[v + 1]):
            j = mt[a * s + c]
            if j >= 0:
                k = nb[a] * s + j
                self.blocked[k] += delta
                if two:
                    self.blocked2[k] += delta

    def _viable(self, v, c):
        k = v * self.s + c
        fv = self.f[k]
        if fv == 0:
            return False
        if self.blocked[k] < fv:
            return True
        if self.blocked2[k] == 0:
            return False
        self.picks[v] = c
        ok = self._sfd(self.picks)
        self.picks[v] = -1
        return ok

    def _maybe(self, v, c):
        k = v * self.s + c
        fv = self.f[k]
        return fv > 0 and (self.blocked[k] < fv or self.blocked2[k] > 0)

    def _search(self, free):
        self.nodes += 1
        if not free:
            return True
        s = self.s
        best = -1
        bestcnt = s + 1
        for v in free:
            cnt = 0
            for c in range(s):
                if self._maybe(v, c):
                    cnt += 1
            if cnt < bestcnt:
                best, bestcnt = v, cnt
                if cnt == 0:
                    return False
        v = best
        order = sorted(
            (c for c in range(s) if self._maybe(v, c)),
            key=lambda c: (self.blocked[v * s + c] - self.f[v * s + c], c),
        )
        rest = [u for u in free if u != v]
        for c in order:
            if not self._viable(v, c):
                continue
            self.picks[v] = c
            self._place(v, c, 1)
            if self._search(rest):
                return True
            self._place(v, c, -1)
            self.picks[v] = -1
        return False

    def solve(self, fixed=None):
        """Full strictly f-degenerate transversal extending ``fixed`` or None.

        ``fixed`` is a per-vertex list with -1 for free vertices; it must be
        strictly f-degenerate itself (checked, returns None otherwise).
        """
        n, s = self.n, self.s
        self.picks = [-1] * n
        self.blocked = [0] * (n * s)
        self.blocked2 = [0] * (n * s)
        free = []
        for v in range(n):
            c = -1 if fixed is None else fixed[v]
            if c >= 0:
                self.picks[v] = c
                self._place(v, c, 1)
            else:
                free.append(v)
        if len(free) < n and not self._sfd(self.picks):
            return None
        if self._search(free):
            return list(self.picks)
        return None

    # instance enumeration ----------------------------------------------------------

    def _apply(self, kind, var, data, off, opt):
        s = self.s
        base = off + opt * s
        vec = data[base:base + s]
        if kind == 0:
            self.set_matching(var, vec)
        else:
            self.set_f(var, vec)

    def _check_instance(self, precolored):
        if not precolored:
            return self.solve() is not None, None
        s = self.s
        P = len(precolored)
        fixed = [-1] * self.n
        digits = [0] * P
        while True:
            for t, v in enumerate(precolored):
                fixed[v] = digits[t]
            if self._sfd(fixed) and self.solve(fixed) is None:
                return False, list(digits)
            t = 0
            while t < P:
                digits[t] += 1
                if digits[t] < s:
                    break
                digits[t] = 0
                t += 1
            if t == P:
                return True, None

    def product_search(self, kinds, vars_, data, offs, counts, budget, precolored=()):
        """Mixed-radix sweep over option lists; first digit varies fastest.

        Returns ``(checked, fail_index, fail_precoloring)``; ``fail_index`` is
        -1 when every checked instance extends.
        """
        m = len(vars_)
        digits = [0] * m
        for t in range(m):
            self._apply(kinds[t], vars_[t], data, offs[t], 0)
        checked = 0
        index = 0
        while checked < budget:
            ok, pre = self._check_instance(precolored)
            checked += 1
            if not ok:
                return checked, index, pre
            index += 1
            t = 0
            while t < m:
                digits[t] += 1
                if digits[t] < counts[t]:
                    self._apply(kinds[t], vars_[t], data, offs[t], digits[t])
                    break
                digits[t] = 0
                self._apply(kinds[t], vars_[t], data, offs[t], 0)
                t += 1
            if t == m:
                break
        return checked, -1, None

    def batch_search(self, kinds, vars_, data, offs, choices, precolored=()):
        """Check each row of ``choices`` (option index per variable)."""
        m = len(vars_)
        for r, row in enumerate(choices):
            for t in range(m):
                self._apply(kinds[t], vars_[t], data, offs[t], int(row[t]))
            ok, pre = self._check_instance(precolored)
            if not ok:
                return r + 1, r, pre
        return len(choices), -1, None
