# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernel; same interface and semantics as ``_pycore``."""

from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memset


cdef class Kernel:
    cdef public int n, s
    cdef public list edges
    cdef int *ptr
    cdef int *nb
    cdef int *eslot
    cdef int *mt
    cdef int *f
    cdef int *picks
    cdef int *blocked
    cdef int *blocked2
    cdef int *deg
    cdef int *stk
    cdef char *gone
    cdef int *freebuf
    cdef public long nodes
    cdef int nslots

    backend = "cython"

    def __cinit__(self, int n, int s, edges):
        cdef int v, a, e, u, w
        self.n = n
        self.s = s
        self.edges = [tuple(x) for x in edges]
        m = len(self.edges)
        self.nslots = 2 * m
        self.ptr = <int *> calloc(n + 1, sizeof(int))
        self.nb = <int *> calloc(max(1, 2 * m), sizeof(int))
        self.eslot = <int *> calloc(max(1, 2 * m), sizeof(int))
        self.mt = <int *> malloc(max(1, 2 * m * s) * sizeof(int))
        self.f = <int *> malloc(n * s * sizeof(int))
        self.picks = <int *> malloc(n * sizeof(int))
        self.blocked = <int *> calloc(n * s, sizeof(int))
        self.blocked2 = <int *> calloc(n * s, sizeof(int))
        self.deg = <int *> calloc(n, sizeof(int))
        self.stk = <int *> calloc(n, sizeof(int))
        self.gone = <char *> calloc(n, sizeof(char))
        self.freebuf = <int *> calloc(n * (n + 1), sizeof(int))
        for e in range(2 * m * s):
            self.mt[e] = -1
        for e in range(n * s):
            self.f[e] = 1
        for v in range(n):
            self.picks[v] = -1
        nbrs = [[] for _ in range(n)]
        for e, (u, w) in enumerate(self.edges):
            nbrs[u].append((w, e, 0))
            nbrs[w].append((u, e, 1))
        a = 0
        for v in range(n):
            self.ptr[v] = a
            for u, e, side in nbrs[v]:
                self.nb[a] = u
                self.eslot[2 * e + side] = a
                a += 1
        self.ptr[n] = a
        self.nodes = 0

    def __dealloc__(self):
        free(self.ptr)
        free(self.nb)
        free(self.eslot)
        free(self.mt)
        free(self.f)
        free(self.picks)
        free(self.blocked)
        free(self.blocked2)
        free(self.deg)
        free(self.stk)
        free(self.gone)
        free(self.freebuf)

    # buffers ------------------------------------------------------------------

    cdef inline void _set_matching(self, int e, int *mapping) nogil:
        cdef int s = self.s
        cdef int a = self.eslot[2 * e]
        cdef int b = self.eslot[2 * e + 1]
        cdef int i, j
        for i in range(s):
            self.mt[b * s + i] = -1
        for i in range(s):
            j = mapping[i]
            self.mt[a * s + i] = j
            if j >= 0:
                self.mt[b * s + j] = i

    cdef inline void _set_f(self, int v, int *vec) nogil:
        cdef int i
        for i in range(self.s):
            self.f[v * self.s + i] = vec[i]

    def set_matching(self, int e, mapping):
        cdef int buf[64]
        cdef int i
        for i in range(self.s):
            buf[i] = mapping[i]
        self._set_matching(e, buf)

    def set_f(self, int v, fvec):
        cdef int i
        for i in range(self.s):
            self.f[v * self.s + i] = fvec[i]

    def get_matching(self, int e):
        cdef int a = self.eslot[2 * e]
        return [self.mt[a * self.s + i] for i in range(self.s)]

    # strict degeneracy ----------------------------------------------------------

    cdef bint _sfd(self, int *picks) nogil:
        cdef int s = self.s
        cdef int v, u, a, c, d, top = 0, left = 0
        for v in range(self.n):
            self.gone[v] = 0
            c = picks[v]
            if c < 0:
                continue
            left += 1
            d = 0
            for a in range(self.ptr[v], self.ptr[v + 1]):
                u = self.nb[a]
                if picks[u] >= 0 and self.mt[a * s + c] == picks[u]:
                    d += 1
            self.deg[v] = d
            if d < self.f[v * s + c]:
                self.gone[v] = 1
                self.stk[top] = v
                top += 1
                left -= 1
        while top > 0:
            top -= 1
            v = self.stk[top]
            c = picks[v]
            for a in range(self.ptr[v], self.ptr[v + 1]):
                u = self.nb[a]
                if picks[u] >= 0 and not self.gone[u] and self.mt[a * s + c] == picks[u]:
                    self.deg[u] -= 1
                    if self.deg[u] < self.f[u * s + picks[u]]:
                        self.gone[u] = 1
                        self.stk[top] = u
                        top += 1
                        left -= 1
        return left == 0

    def is_sfd(self, picks):
        cdef int v
        for v in range(self.n):
            self.picks[v] = picks[v]
        ok = self._sfd(self.picks)
        for v in range(self.n):
            self.picks[v] = -1
        return bool(ok)

    # backtracking ----------------------------------------------------------------

    cdef inline void _place(self, int v, int c, int delta) nogil:
        cdef int s = self.s
        cdef int a, j, k
        cdef bint two = self.f[v * s + c] >= 2
        for a in range(self.ptr[v], self.ptr[v + 1]):
            j = self.mt[a * s + c]
            if j >= 0:
                k = self.nb[a] * s + j
                self.blocked[k] += delta
                if two:
                    self.blocked2[k] += delta

    cdef inline bint _maybe(self, int v, int c) nogil:
        cdef int k = v * self.s + c
        cdef int fv = self.f[k]
        return fv > 0 and (self.blocked[k] < fv or self.blocked2[k] > 0)

    cdef bint _viable(self, int v, int c) nogil:
        cdef int k = v * self.s + c
        cdef int fv = self.f[k]
        cdef bint ok
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

    cdef bint _search(self, int *freev, int nfree) nogil:
        cdef int s = self.s
        cdef int t, v, c, cnt, best = -1, bestcnt = s + 1, bi = 0, i, r
        cdef int order[64]
        cdef int key[64]
        cdef int no = 0
        cdef int *rest
        self.nodes += 1
        if nfree == 0:
            return True
        for t in range(nfree):
            v = freev[t]
            cnt = 0
            for c in range(s):
                if self._maybe(v, c):
                    cnt += 1
            if cnt < bestcnt:
                best = v
                bestcnt = cnt
                bi = t
                if cnt == 0:
                    return False
        v = best
        for c in range(s):
            if self._maybe(v, c):
                order[no] = c
                key[no] = self.blocked[v * s + c] - self.f[v * s + c]
                no += 1
        # insertion sort by (key, colour); stable on colour order
        for i in range(1, no):
            r = i - 1
            while r >= 0 and key[r] > key[r + 1]:
                key[r], key[r + 1] = key[r + 1], key[r]
                order[r], order[r + 1] = order[r + 1], order[r]
                r -= 1
        rest = freev + nfree
        r = 0
        for t in range(nfree):
            if t != bi:
                rest[r] = freev[t]
                r += 1
        for i in range(no):
            c = order[i]
            if not self._viable(v, c):
                continue
            self.picks[v] = c
            self._place(v, c, 1)
            if self._search(rest, nfree - 1):
                return True
            self._place(v, c, -1)
            self.picks[v] = -1
        return False

    cdef bint _solve(self, int *fixed) nogil:
        cdef int n = self.n, s = self.s
        cdef int v, c, nfree = 0
        memset(self.blocked, 0, n * s * sizeof(int))
        memset(self.blocked2, 0, n * s * sizeof(int))
        for v in range(n):
            self.picks[v] = -1
        for v in range(n):
            c = -1 if fixed == NULL else fixed[v]
            if c >= 0:
                self.picks[v] = c
                self._place(v, c, 1)
            else:
                self.freebuf[nfree] = v
                nfree += 1
        if nfree < n and not self._sfd(self.picks):
            return False
        return self._search(self.freebuf, nfree)

    def solve(self, fixed=None):
        """Full strictly f-degenerate transversal extending ``fixed`` or None."""
        cdef int *fx = NULL
        cdef int v
        cdef bint ok
        if fixed is not None:
            fx = <int *> malloc(self.n * sizeof(int))
            for v in range(self.n):
                fx[v] = fixed[v]
        ok = self._solve(fx)
        free(fx)
        if ok:
            return [self.picks[v] for v in range(self.n)]
        return None

    # instance enumeration ----------------------------------------------------------

    cdef inline void _apply(self, int kind, int var, int *data, int off, int opt) nogil:
        if kind == 0:
            self._set_matching(var, data + off + opt * self.s)
        else:
            self._set_f(var, data + off + opt * self.s)

    cdef int _check(self, int *pre, int P, int *fixed, int *digits) nogil:
        """1 if every admissible precolouring extends; digits hold the failure."""
        cdef int t, v
        if P == 0:
            return 1 if self._solve(NULL) else 0
        for v in range(self.n):
            fixed[v] = -1
        for t in range(P):
            digits[t] = 0
        while True:
            for t in range(P):
                fixed[pre[t]] = digits[t]
            for v in range(self.n):
                self.picks[v] = fixed[v]
            if self._sfd(self.picks):
                if not self._solve(fixed):
                    return 0
            t = 0
            while t < P:
                digits[t] += 1
                if digits[t] < self.s:
                    break
                digits[t] = 0
                t += 1
            if t == P:
                return 1

    def product_search(self, kinds, vars_, data, offs, counts, long budget, precolored=()):
        """Mixed-radix sweep; returns (checked, fail_index, fail_precoloring)."""
        cdef int m = len(vars_)
        cdef int P = len(precolored)
        cdef int *k = <int *> malloc(max(1, m) * sizeof(int))
        cdef int *va = <int *> malloc(max(1, m) * sizeof(int))
        cdef int *of = <int *> malloc(max(1, m) * sizeof(int))
        cdef int *cn = <int *> malloc(max(1, m) * sizeof(int))
        cdef int *dg = <int *> calloc(max(1, m), sizeof(int))
        cdef int nd = len(data)
        cdef int *dt = <int *> malloc(max(1, nd) * sizeof(int))
        cdef int *pre = <int *> malloc(max(1, P) * sizeof(int))
        cdef int *fixed = <int *> malloc(self.n * sizeof(int))
        cdef int *pd = <int *> malloc(max(1, P) * sizeof(int))
        cdef int t
        cdef long checked = 0, index = 0, fail = -1
        for t in range(m):
            k[t] = kinds[t]
            va[t] = vars_[t]
            of[t] = offs[t]
            cn[t] = counts[t]
        for t in range(nd):
            dt[t] = data[t]
        for t in range(P):
            pre[t] = precolored[t]
        with nogil:
            for t in range(m):
                self._apply(k[t], va[t], dt, of[t], 0)
            while checked < budget:
                checked += 1
                if not self._check(pre, P, fixed, pd):
                    fail = index
                    break
                index += 1
                t = 0
                while t < m:
                    dg[t] += 1
                    if dg[t] < cn[t]:
                        self._apply(k[t], va[t], dt, of[t], dg[t])
                        break
                    dg[t] = 0
                    self._apply(k[t], va[t], dt, of[t], 0)
                    t += 1
                if t == m:
                    break
        failpre = [pd[t] for t in range(P)] if (fail >= 0 and P) else None
        free(k); free(va); free(of); free(cn); free(dg); free(dt)
        free(pre); free(fixed); free(pd)
        return checked, fail, failpre

    def batch_search(self, kinds, vars_, data, offs, choices, precolored=()):
        """Check each row of ``choices`` (option index per variable)."""
        cdef int m = len(vars_)
        cdef int P = len(precolored)
        cdef int nd = len(data)
        cdef int *dt = <int *> malloc(max(1, nd) * sizeof(int))
        cdef int *k = <int *> malloc(max(1, m) * sizeof(int))
        cdef int *va = <int *> malloc(max(1, m) * sizeof(int))
        cdef int *of = <int *> malloc(max(1, m) * sizeof(int))
        cdef int *pre = <int *> malloc(max(1, P) * sizeof(int))
        cdef int *fixed = <int *> malloc(self.n * sizeof(int))
        cdef int *pd = <int *> malloc(max(1, P) * sizeof(int))
        cdef long rows = len(choices)
        cdef long r, fail = -1, checked = 0
        cdef int t
        cdef int[:, ::1] ch
        import numpy as np
        arr = np.ascontiguousarray(choices, dtype=np.intc).reshape(rows, m)
        ch = arr
        for t in range(m):
            k[t] = kinds[t]
            va[t] = vars_[t]
            of[t] = offs[t]
        for t in range(nd):
            dt[t] = data[t]
        for t in range(P):
            pre[t] = precolored[t]
        with nogil:
            for r in range(rows):
                for t in range(m):
                    self._apply(k[t], va[t], dt, of[t], ch[r, t])
                checked += 1
                if not self._check(pre, P, fixed, pd):
                    fail = r
                    break
        failpre = [pd[t] for t in range(P)] if (fail >= 0 and P) else None
        free(dt); free(k); free(va); free(of); free(pre); free(fixed); free(pd)
        return checked, fail, failpre
