# cython: language_level=3, boundscheck=False, wraparound=True
# cython: initializedcheck=False, cdivision=True
"""Maximum-weight matching, compiled kernel.

Typed translation of ``_blossom.py``: identical algorithm, identical
iteration order, bit-identical results.  Flat state lives in C arrays;
the nested blossom structure stays in Python lists (cold path).
Wraparound must stay on: the cycle walks index child lists negatively.
Keep the two modules in sync.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

cdef int _FREE = 0
cdef int _S = 1
cdef int _T = 2


cdef class _Context:

    cdef int n, m
    cdef int *us
    cdef int *vs
    cdef long long *ws
    cdef int *end
    cdef int *nbr_start
    cdef int *nbr
    cdef int *mate
    cdef int *label
    cdef int *label_end
    cdef int *in_blossom
    cdef int *parent
    cdef int *base
    cdef int *best_edge
    cdef long long *dual
    cdef char *allowed
    cdef list childs, endps, bloss_best_edges, unused, queue

    def __cinit__(self, int n, object us, object vs, object ws):
        cdef int m = len(us)
        cdef int k, v, u
        self.n = n
        self.m = m
        self.us = <int *> malloc(m * sizeof(int))
        self.vs = <int *> malloc(m * sizeof(int))
        self.ws = <long long *> malloc(m * sizeof(long long))
        self.end = <int *> malloc(2 * m * sizeof(int))
        self.nbr_start = <int *> malloc((n + 1) * sizeof(int))
        self.nbr = <int *> malloc(2 * m * sizeof(int))
        self.mate = <int *> malloc(n * sizeof(int))
        self.label = <int *> malloc(2 * n * sizeof(int))
        self.label_end = <int *> malloc(2 * n * sizeof(int))
        self.in_blossom = <int *> malloc(n * sizeof(int))
        self.parent = <int *> malloc(2 * n * sizeof(int))
        self.base = <int *> malloc(2 * n * sizeof(int))
        self.best_edge = <int *> malloc(2 * n * sizeof(int))
        self.dual = <long long *> malloc(2 * n * sizeof(long long))
        self.allowed = <char *> malloc(m * sizeof(char))
        if (self.us == NULL or self.vs == NULL or self.ws == NULL
                or self.end == NULL or self.nbr_start == NULL
                or self.nbr == NULL or self.mate == NULL
                or self.label == NULL or self.label_end == NULL
                or self.in_blossom == NULL or self.parent == NULL
                or self.base == NULL or self.best_edge == NULL
                or self.dual == NULL or self.allowed == NULL):
            raise MemoryError()

        for k in range(m):
            self.us[k] = us[k]
            self.vs[k] = vs[k]
            self.ws[k] = ws[k]
            self.end[2 * k] = self.us[k]
            self.end[2 * k + 1] = self.vs[k]

        # CSR adjacency over endpoint pointers (see _blossom.py).
        cdef int *deg = <int *> malloc(n * sizeof(int))
        if deg == NULL:
            raise MemoryError()
        memset(deg, 0, n * sizeof(int))
        for k in range(m):
            deg[self.us[k]] += 1
            deg[self.vs[k]] += 1
        self.nbr_start[0] = 0
        for v in range(n):
            self.nbr_start[v + 1] = self.nbr_start[v] + deg[v]
        cdef int *fill = deg  # reuse as fill cursor
        for v in range(n):
            fill[v] = self.nbr_start[v]
        for k in range(m):
            u = self.us[k]
            v = self.vs[k]
            self.nbr[fill[u]] = 2 * k + 1
            fill[u] += 1
            self.nbr[fill[v]] = 2 * k
            fill[v] += 1
        free(deg)

        cdef long long max_weight = 0
        for k in range(m):
            if self.ws[k] > max_weight:
                max_weight = self.ws[k]

        for v in range(n):
            self.mate[v] = -1
            self.in_blossom[v] = v
            self.dual[v] = max_weight
        for v in range(2 * n):
            self.label[v] = _FREE
            self.label_end[v] = -1
            self.parent[v] = -1
            self.best_edge[v] = -1
        for v in range(n):
            self.base[v] = v
        for v in range(n, 2 * n):
            self.base[v] = -1
            self.dual[v] = 0
        memset(self.allowed, 0, m * sizeof(char))

        self.childs = [None] * (2 * n)
        self.endps = [None] * (2 * n)
        self.bloss_best_edges = [None] * (2 * n)
        self.unused = list(range(n, 2 * n))
        self.queue = []

    def __dealloc__(self):
        free(self.us)
        free(self.vs)
        free(self.ws)
        free(self.end)
        free(self.nbr_start)
        free(self.nbr)
        free(self.mate)
        free(self.label)
        free(self.label_end)
        free(self.in_blossom)
        free(self.parent)
        free(self.base)
        free(self.best_edge)
        free(self.dual)
        free(self.allowed)

    cdef inline long long edge_slack(self, int k):
        return self.dual[self.us[k]] + self.dual[self.vs[k]] - 2 * self.ws[k]

    cdef list blossom_leaves(self, int b):
        cdef list out, stack
        cdef int t
        if b < self.n:
            return [b]
        out = []
        stack = [b]
        while stack:
            t = stack.pop()
            if t < self.n:
                out.append(t)
            else:
                stack.extend(reversed(<list> self.childs[t]))
        return out

    cdef int assign_label(self, int w, int t, int p) except -1:
        cdef int b = self.in_blossom[w]
        cdef int bv
        assert self.label[w] == _FREE and self.label[b] == _FREE
        self.label[w] = t
        self.label[b] = t
        self.label_end[w] = p
        self.label_end[b] = p
        self.best_edge[w] = -1
        self.best_edge[b] = -1
        if t == _S:
            self.queue.extend(self.blossom_leaves(b))
        else:
            bv = self.base[b]
            assert self.mate[bv] >= 0
            self.assign_label(self.end[self.mate[bv]], _S, self.mate[bv] ^ 1)
        return 0

    cdef int scan_blossom(self, int v, int w) except -2:
        cdef list path = []
        cdef int lca = -1
        cdef int b
        while v != -1 or w != -1:
            b = self.in_blossom[v]
            if self.label[b] & 4:
                lca = self.base[b]
                break
            assert self.label[b] == _S
            path.append(b)
            self.label[b] = 5
            assert self.label_end[b] == self.mate[self.base[b]]
            if self.label_end[b] == -1:
                v = -1
            else:
                v = self.end[self.label_end[b]]
                b = self.in_blossom[v]
                assert self.label[b] == _T
                assert self.label_end[b] >= 0
                v = self.end[self.label_end[b]]
            if w != -1:
                v, w = w, v
        for b in path:
            self.label[b] = _S
        return lca

    cdef int add_blossom(self, int base_v, int k) except -1:
        cdef int v = self.us[k]
        cdef int w = self.vs[k]
        cdef int bb = self.in_blossom[base_v]
        cdef int bv = self.in_blossom[v]
        cdef int bw = self.in_blossom[w]
        cdef int b = self.unused.pop()
        cdef int leaf, child, e, i, j, bj, q
        cdef list path, endps, lists, lst, merged

        self.base[b] = base_v
        self.parent[b] = -1
        self.parent[bb] = b

        path = []
        endps = []
        while bv != bb:
            self.parent[bv] = b
            path.append(bv)
            endps.append(self.label_end[bv])
            assert self.label[bv] == _T or (
                self.label[bv] == _S
                and self.label_end[bv] == self.mate[self.base[bv]])
            assert self.label_end[bv] >= 0
            v = self.end[self.label_end[bv]]
            bv = self.in_blossom[v]
        path.append(bb)
        path.reverse()
        endps.reverse()
        endps.append(2 * k)
        while bw != bb:
            self.parent[bw] = b
            path.append(bw)
            endps.append(self.label_end[bw] ^ 1)
            assert self.label[bw] == _T or (
                self.label[bw] == _S
                and self.label_end[bw] == self.mate[self.base[bw]])
            assert self.label_end[bw] >= 0
            w = self.end[self.label_end[bw]]
            bw = self.in_blossom[w]
        self.childs[b] = path
        self.endps[b] = endps

        assert self.label[bb] == _S
        self.label[b] = _S
        self.label_end[b] = self.label_end[bb]
        self.dual[b] = 0

        for leaf in self.blossom_leaves(b):
            if self.label[self.in_blossom[leaf]] == _T:
                self.queue.append(leaf)
            self.in_blossom[leaf] = b

        cdef int *best_to = <int *> malloc(2 * self.n * sizeof(int))
        if best_to == NULL:
            raise MemoryError()
        for i in range(2 * self.n):
            best_to[i] = -1
        for child in path:
            if self.bloss_best_edges[child] is None:
                lists = []
                for leaf in self.blossom_leaves(child):
                    lst = []
                    for q in range(self.nbr_start[leaf],
                                   self.nbr_start[leaf + 1]):
                        lst.append(self.nbr[q] // 2)
                    lists.append(lst)
            else:
                lists = [self.bloss_best_edges[child]]
            for lst in lists:
                for e in lst:
                    i = self.us[e]
                    j = self.vs[e]
                    if self.in_blossom[j] == b:
                        i, j = j, i
                    bj = self.in_blossom[j]
                    if (bj != b and self.label[bj] == _S
                            and (best_to[bj] == -1
                                 or self.edge_slack(e)
                                 < self.edge_slack(best_to[bj]))):
                        best_to[bj] = e
            self.bloss_best_edges[child] = None
            self.best_edge[child] = -1
        merged = []
        for i in range(2 * self.n):
            if best_to[i] != -1:
                merged.append(best_to[i])
        free(best_to)
        self.bloss_best_edges[b] = merged
        self.best_edge[b] = -1
        for e in merged:
            if (self.best_edge[b] == -1
                    or self.edge_slack(e) < self.edge_slack(self.best_edge[b])):
                self.best_edge[b] = e
        return 0

    cdef int expand_blossom(self, int b, bint end_stage) except -1:
        cdef int s, leaf, j, j_step, endp_trick, p, child, entry
        cdef list b_childs = <list> self.childs[b]
        cdef list b_endps = <list> self.endps[b]

        for s in b_childs:
            self.parent[s] = -1
            if s < self.n:
                self.in_blossom[s] = s
            elif end_stage and self.dual[s] == 0:
                self.expand_blossom(s, end_stage)
            else:
                for leaf in self.blossom_leaves(s):
                    self.in_blossom[leaf] = s

        if (not end_stage) and self.label[b] == _T:
            assert self.label_end[b] >= 0
            entry = self.in_blossom[self.end[self.label_end[b] ^ 1]]
            j = b_childs.index(entry)
            if j & 1:
                j -= len(b_childs)
                j_step = 1
                endp_trick = 0
            else:
                j_step = -1
                endp_trick = 1
            p = self.label_end[b]
            while j != 0:
                self.label[self.end[p ^ 1]] = _FREE
                self.label[self.end[
                    <int> b_endps[j - endp_trick] ^ endp_trick ^ 1]] = _FREE
                self.assign_label(self.end[p ^ 1], _T, p)
                self.allowed[<int> b_endps[j - endp_trick] // 2] = 1
                j += j_step
                p = <int> b_endps[j - endp_trick] ^ endp_trick
                self.allowed[p // 2] = 1
                j += j_step
            child = b_childs[j]
            self.label[self.end[p ^ 1]] = _T
            self.label[child] = _T
            self.label_end[self.end[p ^ 1]] = p
            self.label_end[child] = p
            self.best_edge[child] = -1
            j += j_step
            while <int> b_childs[j] != entry:
                child = b_childs[j]
                if self.label[child] == _S:
                    j += j_step
                    continue
                leaf = -1
                for leaf in self.blossom_leaves(child):
                    if self.label[leaf] != _FREE:
                        break
                if leaf >= 0 and self.label[leaf] != _FREE:
                    assert self.label[leaf] == _T
                    assert self.in_blossom[leaf] == child
                    self.label[leaf] = _FREE
                    self.label[self.end[self.mate[self.base[child]]]] = _FREE
                    self.assign_label(leaf, _T, self.label_end[leaf])
                j += j_step

        self.label[b] = -1
        self.label_end[b] = -1
        self.childs[b] = None
        self.endps[b] = None
        self.base[b] = -1
        self.bloss_best_edges[b] = None
        self.best_edge[b] = -1
        self.unused.append(b)
        return 0

    cdef int augment_blossom(self, int b, int v) except -1:
        cdef int t = v
        cdef int i, j, j_step, endp_trick, p
        cdef list b_childs, b_endps
        while self.parent[t] != b:
            t = self.parent[t]
        if t >= self.n:
            self.augment_blossom(t, v)
        b_childs = <list> self.childs[b]
        b_endps = <list> self.endps[b]
        i = j = b_childs.index(t)
        if i & 1:
            j -= len(b_childs)
            j_step = 1
            endp_trick = 0
        else:
            j_step = -1
            endp_trick = 1
        while j != 0:
            j += j_step
            t = b_childs[j]
            p = <int> b_endps[j - endp_trick] ^ endp_trick
            if t >= self.n:
                self.augment_blossom(t, self.end[p])
            j += j_step
            t = b_childs[j]
            if t >= self.n:
                self.augment_blossom(t, self.end[p ^ 1])
            self.mate[self.end[p]] = p ^ 1
            self.mate[self.end[p ^ 1]] = p
        self.childs[b] = b_childs[i:] + b_childs[:i]
        self.endps[b] = b_endps[i:] + b_endps[:i]
        self.base[b] = self.base[<int> (<list> self.childs[b])[0]]
        assert self.base[b] == v
        return 0

    cdef int augment_matching(self, int k) except -1:
        cdef int s, p, bs, t, bt, j, side
        for side in range(2):
            if side == 0:
                s = self.us[k]
                p = 2 * k + 1
            else:
                s = self.vs[k]
                p = 2 * k
            while True:
                bs = self.in_blossom[s]
                assert self.label[bs] == _S
                assert self.label_end[bs] == self.mate[self.base[bs]]
                if bs >= self.n:
                    self.augment_blossom(bs, s)
                self.mate[s] = p
                if self.label_end[bs] == -1:
                    break
                t = self.end[self.label_end[bs]]
                bt = self.in_blossom[t]
                assert self.label[bt] == _T
                assert self.label_end[bt] >= 0
                s = self.end[self.label_end[bt]]
                j = self.end[self.label_end[bt] ^ 1]
                assert self.base[bt] == t
                if bt >= self.n:
                    self.augment_blossom(bt, j)
                self.mate[j] = self.label_end[bt]
                p = self.label_end[bt] ^ 1
        return 0

    cdef int run(self) except -1:
        cdef int n = self.n
        cdef int stage, i, k, v, w, b, q, p, bw, lca, lbl
        cdef int delta_type, delta_edge, delta_blossom
        cdef long long delta, d, k_slack
        cdef bint augmented

        for stage in range(n):
            for i in range(2 * n):
                self.label[i] = _FREE
                self.best_edge[i] = -1
            for i in range(n, 2 * n):
                self.bloss_best_edges[i] = None
            memset(self.allowed, 0, self.m * sizeof(char))
            del self.queue[:]

            for v in range(n):
                if (self.mate[v] == -1
                        and self.label[self.in_blossom[v]] == _FREE):
                    self.assign_label(v, _S, -1)

            augmented = False
            while True:
                while self.queue and not augmented:
                    v = self.queue.pop()
                    assert self.label[self.in_blossom[v]] == _S
                    k_slack = 0
                    for q in range(self.nbr_start[v], self.nbr_start[v + 1]):
                        p = self.nbr[q]
                        k = p // 2
                        w = self.end[p]
                        if self.in_blossom[v] == self.in_blossom[w]:
                            continue
                        if not self.allowed[k]:
                            k_slack = self.edge_slack(k)
                            if k_slack <= 0:
                                self.allowed[k] = 1
                        if self.allowed[k]:
                            bw = self.in_blossom[w]
                            if self.label[bw] == _FREE:
                                self.assign_label(w, _T, p ^ 1)
                            elif self.label[bw] == _S:
                                lca = self.scan_blossom(v, w)
                                if lca >= 0:
                                    self.add_blossom(lca, k)
                                else:
                                    self.augment_matching(k)
                                    augmented = True
                                    break
                            elif self.label[w] == _FREE:
                                assert self.label[bw] == _T
                                self.label[w] = _T
                                self.label_end[w] = p ^ 1
                        elif self.label[self.in_blossom[w]] == _S:
                            b = self.in_blossom[v]
                            if (self.best_edge[b] == -1
                                    or k_slack
                                    < self.edge_slack(self.best_edge[b])):
                                self.best_edge[b] = k
                        elif self.label[w] == _FREE:
                            if (self.best_edge[w] == -1
                                    or k_slack
                                    < self.edge_slack(self.best_edge[w])):
                                self.best_edge[w] = k
                if augmented:
                    break

                delta_type = 1
                delta = self.dual[0]
                for v in range(1, n):
                    if self.dual[v] < delta:
                        delta = self.dual[v]
                delta_edge = -1
                delta_blossom = -1
                for v in range(n):
                    if (self.label[self.in_blossom[v]] == _FREE
                            and self.best_edge[v] != -1):
                        d = self.edge_slack(self.best_edge[v])
                        if d < delta:
                            delta = d
                            delta_type = 2
                            delta_edge = self.best_edge[v]
                for b in range(2 * n):
                    if (self.parent[b] == -1 and self.label[b] == _S
                            and self.best_edge[b] != -1):
                        k_slack = self.edge_slack(self.best_edge[b])
                        assert k_slack % 2 == 0
                        d = k_slack // 2
                        if d < delta:
                            delta = d
                            delta_type = 3
                            delta_edge = self.best_edge[b]
                for b in range(n, 2 * n):
                    if (self.base[b] >= 0 and self.parent[b] == -1
                            and self.label[b] == _T
                            and self.dual[b] < delta):
                        delta = self.dual[b]
                        delta_type = 4
                        delta_blossom = b

                for v in range(n):
                    lbl = self.label[self.in_blossom[v]]
                    if lbl == _S:
                        self.dual[v] -= delta
                    elif lbl == _T:
                        self.dual[v] += delta
                for b in range(n, 2 * n):
                    if self.base[b] >= 0 and self.parent[b] == -1:
                        if self.label[b] == _S:
                            self.dual[b] += delta
                        elif self.label[b] == _T:
                            self.dual[b] -= delta

                if delta_type == 1:
                    break
                elif delta_type == 2:
                    self.allowed[delta_edge] = 1
                    i = self.us[delta_edge]
                    if self.label[self.in_blossom[i]] == _FREE:
                        i = self.vs[delta_edge]
                    assert self.label[self.in_blossom[i]] == _S
                    self.queue.append(i)
                elif delta_type == 3:
                    self.allowed[delta_edge] = 1
                    i = self.us[delta_edge]
                    assert self.label[self.in_blossom[i]] == _S
                    self.queue.append(i)
                else:
                    self.expand_blossom(delta_blossom, False)

            if not augmented:
                break

            for b in range(n, 2 * n):
                if (self.parent[b] == -1 and self.base[b] >= 0
                        and self.label[b] == _S and self.dual[b] == 0):
                    self.expand_blossom(b, True)
        return 0

    cdef int verify_optimum(self) except -1:
        cdef int n = self.n
        cdef int k, i, j, v, b, bi, bj, idx
        cdef long long s
        cdef list i_chain, j_chain, b_endps
        for v in range(n):
            assert self.dual[v] >= 0
        for b in range(n, 2 * n):
            assert self.dual[b] >= 0
        for k in range(self.m):
            i = self.us[k]
            j = self.vs[k]
            s = self.dual[i] + self.dual[j] - 2 * self.ws[k]
            i_chain = [i]
            j_chain = [j]
            while self.parent[<int> i_chain[len(i_chain) - 1]] != -1:
                i_chain.append(self.parent[<int> i_chain[len(i_chain) - 1]])
            while self.parent[<int> j_chain[len(j_chain) - 1]] != -1:
                j_chain.append(self.parent[<int> j_chain[len(j_chain) - 1]])
            i_chain.reverse()
            j_chain.reverse()
            for idx in range(min(len(i_chain), len(j_chain))):
                bi = i_chain[idx]
                bj = j_chain[idx]
                if bi != bj:
                    break
                s += 2 * self.dual[bi]
            assert s >= 0
            # Guard the sign: C division truncates, so -1 // 2 would be 0.
            if ((self.mate[i] >= 0 and self.mate[i] // 2 == k)
                    or (self.mate[j] >= 0 and self.mate[j] // 2 == k)):
                assert self.mate[i] >= 0 and self.mate[i] // 2 == k
                assert self.mate[j] >= 0 and self.mate[j] // 2 == k
                assert s == 0
        for v in range(n):
            assert self.mate[v] >= 0 or self.dual[v] == 0
        for b in range(n, 2 * n):
            if self.base[b] >= 0 and self.dual[b] > 0:
                b_endps = <list> self.endps[b]
                assert len(b_endps) % 2 == 1
                for idx in range(1, len(b_endps), 2):
                    i = b_endps[idx]
                    assert self.mate[self.end[i]] == i ^ 1
                    assert self.mate[self.end[i ^ 1]] == i
        return 0

    cdef list extract(self):
        cdef list out = [-1] * self.n
        cdef int v
        for v in range(self.n):
            if self.mate[v] >= 0:
                out[v] = self.end[self.mate[v]]
        for v in range(self.n):
            assert out[v] == -1 or <int> out[<int> out[v]] == v
        return out


def solve(n, us, vs, ws):
    """Compiled twin of ``_blossom.solve``; see that module for the contract."""
    if n == 0 or len(us) == 0:
        return [-1] * n
    cdef _Context ctx = _Context(n, us, vs, ws)
    ctx.run()
    ctx.verify_optimum()
    return ctx.extract()
