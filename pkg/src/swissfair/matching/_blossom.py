"""Maximum-weight matching in general graphs, pure-Python kernel.

Primal-dual ("blossom") method: the algorithm grows alternating trees from
unmatched vertices, shrinking odd cycles into blossoms, and adjusts a dual
solution until no augmenting path of zero slack exists.  Runs in O(V^3).

Weights must be non-negative integers.  All dual variables then stay
integral, which lets :func:`solve` finish by checking an exact optimality
certificate (complementary slackness) on its own output.

``_blossom_cy.pyx`` is the compiled twin of this module: same algorithm,
same iteration order, bit-identical results.  Keep the two in sync.
"""

from __future__ import annotations

# Vertex / blossom labels. FREE vertices are outside the alternating trees,
# S vertices are at even depth (candidates for augmenting), T at odd depth.
_FREE = 0
_S = 1
_T = 2


class _Context:
    """State of one matching computation.

    Vertices are 0..n-1 and double as their own trivial blossoms; ids
    n..2n-1 are recycled for nontrivial blossoms.  Matched partners are
    tracked as *endpoint pointers*: edge k owns endpoints 2k and 2k+1,
    and ``end[p]`` is the vertex at endpoint p.
    """

    def __init__(self, n, us, vs, ws):
        m = len(us)
        self.n = n
        self.m = m
        self.us = us
        self.vs = vs
        self.ws = ws

        # end[2k] = us[k], end[2k+1] = vs[k].
        end = [0] * (2 * m)
        for k in range(m):
            end[2 * k] = us[k]
            end[2 * k + 1] = vs[k]
        self.end = end

        # CSR adjacency: nbr[nbr_start[v]:nbr_start[v+1]] holds the endpoint
        # pointers p whose *remote* end is v's neighbour (end[p ^ 1] == v).
        deg = [0] * n
        for k in range(m):
            deg[us[k]] += 1
            deg[vs[k]] += 1
        nbr_start = [0] * (n + 1)
        for v in range(n):
            nbr_start[v + 1] = nbr_start[v] + deg[v]
        fill = list(nbr_start[:n])
        nbr = [0] * (2 * m)
        for k in range(m):
            u, v = us[k], vs[k]
            nbr[fill[u]] = 2 * k + 1
            fill[u] += 1
            nbr[fill[v]] = 2 * k
            fill[v] += 1
        self.nbr_start = nbr_start
        self.nbr = nbr

        max_weight = max(ws)

        # mate[v] = endpoint pointer of v's matched edge, or -1.
        self.mate = [-1] * n
        # label / label_end per vertex-or-blossom id.
        self.label = [_FREE] * (2 * n)
        self.label_end = [-1] * (2 * n)
        # in_blossom[v] = top-level blossom containing vertex v.
        self.in_blossom = list(range(n))
        # Blossom structure.
        self.parent = [-1] * (2 * n)
        self.base = list(range(n)) + [-1] * n
        self.childs = [None] * (2 * n)
        self.endps = [None] * (2 * n)
        self.unused = list(range(n, 2 * n))
        # Least-slack edge bookkeeping for dual updates.
        self.best_edge = [-1] * (2 * n)
        self.bloss_best_edges = [None] * (2 * n)
        # Dual variables: vertices start at max weight, blossoms at 0, so
        # that every edge has non-negative initial slack.
        self.dual = [max_weight] * n + [0] * n
        self.allowed = [False] * m
        self.queue = []

    # -- primitives --------------------------------------------------------

    def slack(self, k):
        """Slack of edge k under the current duals (>= 0 throughout)."""
        return self.dual[self.us[k]] + self.dual[self.vs[k]] - 2 * self.ws[k]

    def blossom_leaves(self, b):
        """All vertices contained in blossom b, depth first."""
        if b < self.n:
            return [b]
        out = []
        stack = [b]
        while stack:
            t = stack.pop()
            if t < self.n:
                out.append(t)
            else:
                # Reversed keeps children in list order on the stack.
                stack.extend(reversed(self.childs[t]))
        return out

    def assign_label(self, w, t, p):
        """Label vertex w and its blossom with t, reached via endpoint p."""
        b = self.in_blossom[w]
        assert self.label[w] == _FREE and self.label[b] == _FREE
        self.label[w] = self.label[b] = t
        self.label_end[w] = self.label_end[b] = p
        self.best_edge[w] = self.best_edge[b] = -1
        if t == _S:
            # S-blossom: schedule all its vertices for scanning.
            self.queue.extend(self.blossom_leaves(b))
        else:
            # T-blossom: its base's mate becomes an S-vertex.
            bv = self.base[b]
            assert self.mate[bv] >= 0
            self.assign_label(self.end[self.mate[bv]], _S, self.mate[bv] ^ 1)

    def scan_blossom(self, v, w):
        """Trace back from S-vertices v and w.

        Returns the base vertex of their lowest common blossom ancestor, or
        -1 if the trails reach two different tree roots (augmenting path).
        """
        path = []
        lca = -1
        while v != -1 or w != -1:
            b = self.in_blossom[v]
            if self.label[b] & 4:
                lca = self.base[b]
                break
            assert self.label[b] == _S
            path.append(b)
            self.label[b] = 5  # temporary "visited" mark
            assert self.label_end[b] == self.mate[self.base[b]]
            if self.label_end[b] == -1:
                v = -1  # reached a tree root
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

    def add_blossom(self, base_v, k):
        """Shrink the odd cycle through edge k and base vertex base_v."""
        v = self.us[k]
        w = self.vs[k]
        bb = self.in_blossom[base_v]
        bv = self.in_blossom[v]
        bw = self.in_blossom[w]

        b = self.unused.pop()
        self.base[b] = base_v
        self.parent[b] = -1
        self.parent[bb] = b

        path = []
        endps = []
        # Walk from v down to the base, collecting sub-blossoms.
        while bv != bb:
            self.parent[bv] = b
            path.append(bv)
            endps.append(self.label_end[bv])
            assert self.label[bv] == _T or (
                self.label[bv] == _S
                and self.label_end[bv] == self.mate[self.base[bv]]
            )
            assert self.label_end[bv] >= 0
            v = self.end[self.label_end[bv]]
            bv = self.in_blossom[v]
        path.append(bb)
        path.reverse()
        endps.reverse()
        endps.append(2 * k)
        # Walk from w down to the base.
        while bw != bb:
            self.parent[bw] = b
            path.append(bw)
            endps.append(self.label_end[bw] ^ 1)
            assert self.label[bw] == _T or (
                self.label[bw] == _S
                and self.label_end[bw] == self.mate[self.base[bw]]
            )
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
                # Former T-vertex turned S: schedule it.
                self.queue.append(leaf)
            self.in_blossom[leaf] = b

        # Merge the per-blossom least-slack edge lists of the children.
        best_to = [-1] * (2 * self.n)
        for child in path:
            if self.bloss_best_edges[child] is None:
                lists = [
                    [
                        self.nbr[q] // 2
                        for q in range(
                            self.nbr_start[leaf], self.nbr_start[leaf + 1]
                        )
                    ]
                    for leaf in self.blossom_leaves(child)
                ]
            else:
                lists = [self.bloss_best_edges[child]]
            for lst in lists:
                for e in lst:
                    i, j = self.us[e], self.vs[e]
                    if self.in_blossom[j] == b:
                        i, j = j, i
                    bj = self.in_blossom[j]
                    if (
                        bj != b
                        and self.label[bj] == _S
                        and (
                            best_to[bj] == -1
                            or self.slack(e) < self.slack(best_to[bj])
                        )
                    ):
                        best_to[bj] = e
            self.bloss_best_edges[child] = None
            self.best_edge[child] = -1
        self.bloss_best_edges[b] = [e for e in best_to if e != -1]
        self.best_edge[b] = -1
        for e in self.bloss_best_edges[b]:
            if self.best_edge[b] == -1 or self.slack(e) < self.slack(
                self.best_edge[b]
            ):
                self.best_edge[b] = e

    def expand_blossom(self, b, end_stage):
        """Undo blossom b, promoting its children to top level."""
        for s in self.childs[b]:
            self.parent[s] = -1
            if s < self.n:
                self.in_blossom[s] = s
            elif end_stage and self.dual[s] == 0:
                # Recursive expansion of exhausted sub-blossoms.
                self.expand_blossom(s, end_stage)
            else:
                for leaf in self.blossom_leaves(s):
                    self.in_blossom[leaf] = s

        # Expanding a T-blossom mid-stage: relabel the path through it.
        if not end_stage and self.label[b] == _T:
            assert self.label_end[b] >= 0
            entry = self.in_blossom[self.end[self.label_end[b] ^ 1]]
            j = self.childs[b].index(entry)
            if j & 1:
                # Odd index: walk forward around the cycle.
                j -= len(self.childs[b])
                j_step = 1
                endp_trick = 0
            else:
                # Even index: walk backward.
                j_step = -1
                endp_trick = 1
            p = self.label_end[b]
            while j != 0:
                # T-sub-blossom on the path.
                self.label[self.end[p ^ 1]] = _FREE
                self.label[
                    self.end[self.endps[b][j - endp_trick] ^ endp_trick ^ 1]
                ] = _FREE
                self.assign_label(self.end[p ^ 1], _T, p)
                self.allowed[self.endps[b][j - endp_trick] // 2] = True
                j += j_step
                p = self.endps[b][j - endp_trick] ^ endp_trick
                self.allowed[p // 2] = True
                j += j_step
            # The base child keeps label T without relabelling its mate.
            child = self.childs[b][j]
            self.label[self.end[p ^ 1]] = self.label[child] = _T
            self.label_end[self.end[p ^ 1]] = self.label_end[child] = p
            self.best_edge[child] = -1
            # Off-path children become free unless labelled from outside.
            j += j_step
            while self.childs[b][j] != entry:
                child = self.childs[b][j]
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

        # Recycle the id.
        self.label[b] = -1
        self.label_end[b] = -1
        self.childs[b] = None
        self.endps[b] = None
        self.base[b] = -1
        self.bloss_best_edges[b] = None
        self.best_edge[b] = -1
        self.unused.append(b)

    def augment_blossom(self, b, v):
        """Rotate blossom b so that vertex v becomes its base."""
        t = v
        while self.parent[t] != b:
            t = self.parent[t]
        if t >= self.n:
            self.augment_blossom(t, v)
        i = j = self.childs[b].index(t)
        if i & 1:
            j -= len(self.childs[b])
            j_step = 1
            endp_trick = 0
        else:
            j_step = -1
            endp_trick = 1
        while j != 0:
            j += j_step
            t = self.childs[b][j]
            p = self.endps[b][j - endp_trick] ^ endp_trick
            if t >= self.n:
                self.augment_blossom(t, self.end[p])
            j += j_step
            t = self.childs[b][j]
            if t >= self.n:
                self.augment_blossom(t, self.end[p ^ 1])
            # Flip the pair of cycle edges to matched.
            self.mate[self.end[p]] = p ^ 1
            self.mate[self.end[p ^ 1]] = p
        self.childs[b] = self.childs[b][i:] + self.childs[b][:i]
        self.endps[b] = self.endps[b][i:] + self.endps[b][:i]
        self.base[b] = self.base[self.childs[b][0]]
        assert self.base[b] == v

    def augment_matching(self, k):
        """Augment along the path through zero-slack edge k."""
        for s, p in ((self.us[k], 2 * k + 1), (self.vs[k], 2 * k)):
            while True:
                bs = self.in_blossom[s]
                assert self.label[bs] == _S
                assert self.label_end[bs] == self.mate[self.base[bs]]
                if bs >= self.n:
                    self.augment_blossom(bs, s)
                self.mate[s] = p
                if self.label_end[bs] == -1:
                    break  # reached the tree root
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

    # -- main loop ---------------------------------------------------------

    def run(self):
        n = self.n
        for _stage in range(n):
            # Reset per-stage structures.
            for i in range(2 * n):
                self.label[i] = _FREE
                self.best_edge[i] = -1
            for i in range(n, 2 * n):
                self.bloss_best_edges[i] = None
            for k in range(self.m):
                self.allowed[k] = False
            del self.queue[:]

            for v in range(n):
                if self.mate[v] == -1 and self.label[self.in_blossom[v]] == _FREE:
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
                            k_slack = self.slack(k)
                            if k_slack <= 0:
                                self.allowed[k] = True
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
                            if self.best_edge[b] == -1 or k_slack < self.slack(
                                self.best_edge[b]
                            ):
                                self.best_edge[b] = k
                        elif self.label[w] == _FREE:
                            if self.best_edge[w] == -1 or k_slack < self.slack(
                                self.best_edge[w]
                            ):
                                self.best_edge[w] = k
                if augmented:
                    break

                # Dual update: pick the smallest of the four bound types.
                delta_type = 1
                delta = min(self.dual[:n])
                delta_edge = -1
                delta_blossom = -1
                for v in range(n):
                    if (
                        self.label[self.in_blossom[v]] == _FREE
                        and self.best_edge[v] != -1
                    ):
                        d = self.slack(self.best_edge[v])
                        if d < delta:
                            delta = d
                            delta_type = 2
                            delta_edge = self.best_edge[v]
                for b in range(2 * n):
                    if (
                        self.parent[b] == -1
                        and self.label[b] == _S
                        and self.best_edge[b] != -1
                    ):
                        k_slack = self.slack(self.best_edge[b])
                        assert k_slack % 2 == 0
                        d = k_slack // 2
                        if d < delta:
                            delta = d
                            delta_type = 3
                            delta_edge = self.best_edge[b]
                for b in range(n, 2 * n):
                    if (
                        self.base[b] >= 0
                        and self.parent[b] == -1
                        and self.label[b] == _T
                        and self.dual[b] < delta
                    ):
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
                    break  # dual optimum: no more augmenting paths
                elif delta_type == 2:
                    self.allowed[delta_edge] = True
                    i = self.us[delta_edge]
                    if self.label[self.in_blossom[i]] == _FREE:
                        i = self.vs[delta_edge]
                    assert self.label[self.in_blossom[i]] == _S
                    self.queue.append(i)
                elif delta_type == 3:
                    self.allowed[delta_edge] = True
                    i = self.us[delta_edge]
                    assert self.label[self.in_blossom[i]] == _S
                    self.queue.append(i)
                else:
                    self.expand_blossom(delta_blossom, False)

            if not augmented:
                break

            # End of stage: discard exhausted S-blossoms.
            for b in range(n, 2 * n):
                if (
                    self.parent[b] == -1
                    and self.base[b] >= 0
                    and self.label[b] == _S
                    and self.dual[b] == 0
                ):
                    self.expand_blossom(b, True)

    # -- certificate -------------------------------------------------------

    def verify_optimum(self):
        """Check complementary slackness on the final primal/dual pair.

        Exact for integer weights; raises AssertionError on any violation.
        """
        n = self.n
        assert min(self.dual[:n]) >= 0
        assert min(self.dual[n:]) >= 0
        for k in range(self.m):
            i, j = self.us[k], self.vs[k]
            s = self.dual[i] + self.dual[j] - 2 * self.ws[k]
            i_chain = [i]
            j_chain = [j]
            while self.parent[i_chain[-1]] != -1:
                i_chain.append(self.parent[i_chain[-1]])
            while self.parent[j_chain[-1]] != -1:
                j_chain.append(self.parent[j_chain[-1]])
            i_chain.reverse()
            j_chain.reverse()
            for bi, bj in zip(i_chain, j_chain):
                if bi != bj:
                    break
                s += 2 * self.dual[bi]
            assert s >= 0
            if (self.mate[i] >= 0 and self.mate[i] // 2 == k) or (
                self.mate[j] >= 0 and self.mate[j] // 2 == k
            ):
                assert self.mate[i] >= 0 and self.mate[i] // 2 == k
                assert self.mate[j] >= 0 and self.mate[j] // 2 == k
                assert s == 0
        for v in range(n):
            assert self.mate[v] >= 0 or self.dual[v] == 0
        for b in range(n, 2 * n):
            if self.base[b] >= 0 and self.dual[b] > 0:
                assert len(self.endps[b]) % 2 == 1
                for p in self.endps[b][1::2]:
                    assert self.mate[self.end[p]] == p ^ 1
                    assert self.mate[self.end[p ^ 1]] == p


def solve(n, us, vs, ws):
    """Compute a maximum-weight matching.

    Args:
        n: Number of vertices (0..n-1).
        us, vs, ws: Parallel sequences describing edge k as (us[k], vs[k])
            with non-negative integer weight ws[k].  Callers must pass a
            simple graph (no loops, no duplicate pairs); the result depends
            deterministically on the given edge order.

    Returns:
        List ``mate`` of length n with mate[v] = matched partner of v,
        or -1 if v is single.
    """
    if n == 0 or len(us) == 0:
        return [-1] * n
    ctx = _Context(n, us, vs, ws)
    ctx.run()
    ctx.verify_optimum()
    mate = ctx.mate
    out = [-1] * n
    for v in range(n):
        if mate[v] >= 0:
            out[v] = ctx.end[mate[v]]
    for v in range(n):
        assert out[v] == -1 or out[out[v]] == v
    return out
