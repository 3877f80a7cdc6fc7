"""Exact tree solver: bottom-up budgeted dynamic programming.

Every node carries a table indexed by (threshold slot, budget, round tag).
The round tag is 0..lam for "active exactly within that round" plus a
NEVER tag for "contributes nothing".  The threshold slot is either the
node's own threshold or that threshold minus one, the latter standing for
the help of an already-active parent.  Parent tables are assembled from
child tables with budget-split scans:

* round tag 0 (node is seeded): one scan over children, every child may
  use the discounted slot from round 1 on;
* round tag tau in 1..lam (node flips because enough children are active
  by tau - 1): a scan tracking how many children are early, where early
  children must use their full threshold and late children may discount
  only from round tau + 1 on;
* NEVER: one scan, full thresholds only, the node itself not counted.

Infeasible entries hold -inf, which max() and + propagate naturally.
"""
from __future__ import annotations

from .graph import GraphClass, classify
from .instance import Instance, Solution, normalize_thresholds

BOTTOM = float("-inf")

FULL = 1
DISC = 0


def _rooted(graph, root=0):
    """Iterative rooting: preorder, parent array, sorted children lists."""
    n = graph.n
    parent = [-1] * n
    order = []
    children = [[] for _ in range(n)]
    stack = [root]
    seen = bytearray(n)
    seen[root] = 1
    while stack:
        u = stack.pop()
        order.append(u)
        for v in graph.neighbors(u):
            if not seen[v]:
                seen[v] = 1
                parent[v] = u
                children[u].append(v)
                stack.append(v)
    for u in range(n):
        children[u].sort()
    return order, parent, children


def _leaf_table(t_full, bv, lam):
    never = lam + 1
    tbl = [[], []]
    for s, t in ((DISC, max(t_full - 1, 0)), (FULL, t_full)):
        rows = []
        for b in range(bv + 1):
            row = [BOTTOM] * (lam + 2)
            row[0] = 1 if b >= 1 else BOTTOM
            if t == 0:
                for ti in range(1, lam + 1):
                    row[ti] = 1
            row[never] = 0
            rows.append(row)
        tbl[s] = rows
    return tbl


def _maxplus(row, add, cap):
    """(max, +) convolution of two budget-indexed rows, up to cap."""
    out = [BOTTOM] * (cap + 1)
    for j in range(cap + 1):
        best = BOTTOM
        for a in range(j + 1):
            x = row[a]
            if x == BOTTOM:
                continue
            y = add[j - a]
            if y == BOTTOM:
                continue
            s = x + y
            if s > best:
                best = s
        out[j] = best
    return out


def _child_profiles(child_tables, child_caps, bv, lam):
    """Per child: full-slot maxima plus discounted suffix / full prefix."""
    never = lam + 1
    ffull, sdisc, pfull = [], [], []
    for tab, cap in zip(child_tables, child_caps):
        ff, sd, pf = [], [], []
        for m in range(bv + 1):
            me = m if m < cap else cap
            col_full = tab[FULL][me]
            col_disc = tab[DISC][me]
            ff.append(max(col_full))
            suf = [BOTTOM] * (lam + 3)
            for x in range(never, -1, -1):
                nxt = suf[x + 1]
                cur = col_disc[x]
                suf[x] = cur if cur > nxt else nxt
            sd.append(suf)
            pre = [BOTTOM] * (lam + 1)
            best = BOTTOM
            for x in range(lam + 1):
                cur = col_full[x]
                if cur > best:
                    best = cur
                pre[x] = best
            pf.append(pre)
        ffull.append(ff)
        sdisc.append(sd)
        pfull.append(pf)
    return ffull, sdisc, pfull


def _scan_rows(profile_rows, cap):
    """Fold children left to right; returns the list of partial rows."""
    hist = [profile_rows[0][:cap + 1]]
    for add in profile_rows[1:]:
        hist.append(_maxplus(hist[-1], add, cap))
    return hist


def _early_scan_rows(unc, early, cap, kmax):
    """Fold tracking how many children are active before the parent.

    hist[ci][k][j]: best total over the first ci+1 children with budget j
    and at least k of them active early.  Infeasible combinations are -inf.
    """
    d = len(unc)
    rows = [[BOTTOM] * (cap + 1) for _ in range(kmax + 1)]
    rows[0] = unc[0][:cap + 1]
    if kmax >= 1:
        rows[1] = early[0][:cap + 1]
    hist = [rows]
    for ci in range(1, d):
        prev = hist[-1]
        rows = []
        for k in range(kmax + 1):
            stay = _maxplus(prev[k], unc[ci], cap)
            if k >= 1:
                step = _maxplus(prev[k - 1], early[ci], cap)
                rows.append([a if a >= b else b for a, b in zip(stay, step)])
            else:
                rows.append(stay)
        hist.append(rows)
    return hist


def _node_table(t_full, children_idx, ffull, sdisc, pfull, bv, lam):
    """Assemble one internal node's table from child profiles."""
    never = lam + 1
    d = len(children_idx)
    t_disc = max(t_full - 1, 0)

    best1 = [[max(ffull[ci][m], sdisc[ci][m][1]) for m in range(bv + 1)]
             for ci in range(d)]
    amax = _scan_rows(best1, max(bv - 1, 0))[-1] if bv >= 1 else None
    cmax = _scan_rows(ffull, bv)[-1]

    kmax = min(t_full, d)
    case2 = []  # per tau: final rows of the early-count scan
    for tau in range(1, lam + 1):
        x = tau + 1 if tau + 1 <= never else never
        unc = [[max(ffull[ci][m], sdisc[ci][m][x]) for m in range(bv + 1)]
               for ci in range(d)]
        early = [[pfull[ci][m][tau - 1] for m in range(bv + 1)]
                 for ci in range(d)]
        case2.append(_early_scan_rows(unc, early, bv, kmax)[-1])

    tbl = [[], []]
    for s, t in ((DISC, t_disc), (FULL, t_full)):
        rows = []
        for b in range(bv + 1):
            row = [BOTTOM] * (lam + 2)
            if b >= 1:
                row[0] = 1 + amax[b - 1]
            if t <= d:
                for tau in range(1, lam + 1):
                    row[tau] = 1 + case2[tau - 1][t][b]
            row[never] = cmax[b]
            rows.append(row)
        tbl[s] = rows
    return tbl


class _TreeDp:
    """Forward tables plus enough context to reconstruct a seed set."""

    def __init__(self, instance: Instance):
        inst = normalize_thresholds(instance)
        g = inst.graph
        self.inst = inst
        # diffusion stabilizes within n rounds, so larger limits are free
        self.lam = min(inst.lam, g.n)
        self.n = g.n
        self.order, self.parent, self.children = _rooted(g)
        size = [1] * self.n
        for u in reversed(self.order):
            p = self.parent[u]
            if p >= 0:
                size[p] += size[u]
        self.size = size
        self.cap = [min(inst.beta, size[u]) for u in range(self.n)]
        self.tables: list = [None] * self.n
        self.profiles: dict = {}
        for u in reversed(self.order):
            kids = self.children[u]
            t_full = inst.thresholds[u]
            if not kids:
                self.tables[u] = _leaf_table(t_full, self.cap[u], self.lam)
            else:
                prof = _child_profiles([self.tables[c] for c in kids],
                                       [self.cap[c] for c in kids],
                                       self.cap[u], self.lam)
                self.profiles[u] = prof
                self.tables[u] = _node_table(t_full, kids, *prof,
                                             self.cap[u], self.lam)

    def root_choice(self):
        root = self.order[0]
        row = self.tables[root][FULL][self.cap[root]]
        lam = self.lam
        best_ti, best = None, BOTTOM
        for ti in list(range(lam + 1)) + [lam + 1]:
            if row[ti] > best:
                best, best_ti = row[ti], ti
        return root, best_ti, best

    # -- backtracking ----------------------------------------------------

    def _pick_unconstrained(self, c, me, target, x):
        """Child slot/tag achieving ``target`` with discount legal from x."""
        tab = self.tables[c]
        lam = self.lam
        for ti in list(range(lam + 1)) + [lam + 1]:
            if tab[FULL][me][ti] == target:
                return ti, FULL
            if (ti >= x or ti == lam + 1) and tab[DISC][me][ti] == target:
                return ti, DISC
        raise AssertionError("no child configuration matches the table")

    def _pick_early(self, c, me, target, tau):
        tab = self.tables[c]
        for ti in range(tau):
            if tab[FULL][me][ti] == target:
                return ti, FULL
        raise AssertionError("no early child configuration matches")

    def _pick_full_any(self, c, me, target):
        tab = self.tables[c]
        lam = self.lam
        for ti in list(range(lam + 1)) + [lam + 1]:
            if tab[FULL][me][ti] == target:
                return ti, FULL
        raise AssertionError("no full-threshold child configuration matches")

    def backtrack(self, root, ti, seeds=None):
        lam = self.lam
        never = lam + 1
        seeds = set() if seeds is None else seeds
        stack = [(root, self.cap[root], ti, FULL)]
        while stack:
            v, b, ti, s = stack.pop()
            kids = self.children[v]
            t_full = self.inst.thresholds[v]
            t_val = t_full if s == FULL else max(t_full - 1, 0)
            if ti == 0:
                assert b >= 1, "seeded entry with zero budget"
                seeds.add(v)
            if not kids:
                continue
            ffull, sdisc, pfull = self.profiles[v]
            d = len(kids)
            if ti == 0:
                rows_hist = _scan_rows(
                    [[max(ffull[ci][m], sdisc[ci][m][1])
                      for m in range(self.cap[v] + 1)] for ci in range(d)],
                    max(self.cap[v] - 1, 0))
                j = b - 1
                for ci in range(d - 1, -1, -1):
                    target_row = rows_hist[ci]
                    if ci == 0:
                        m = j
                        val = target_row[j]
                    else:
                        prev = rows_hist[ci - 1]
                        add = [max(ffull[ci][x], sdisc[ci][x][1])
                               for x in range(self.cap[v] + 1)]
                        m = None
                        for a in range(j + 1):
                            if prev[a] == BOTTOM or add[j - a] == BOTTOM:
                                continue
                            if prev[a] + add[j - a] == target_row[j]:
                                m = j - a
                                j = a
                                break
                        assert m is not None, "budget split lost"
                        val = add[m]
                    c = kids[ci]
                    me = min(m, self.cap[c])
                    cti, cs = self._pick_unconstrained(c, me, val, 1)
                    stack.append((c, me, cti, cs))
            elif ti == never:
                rows_hist = _scan_rows(ffull, self.cap[v])
                j = b
                for ci in range(d - 1, -1, -1):
                    if ci == 0:
                        m = j
                        val = rows_hist[0][j]
                    else:
                        prev = rows_hist[ci - 1]
                        add = ffull[ci]
                        m = None
                        for a in range(j + 1):
                            if prev[a] == BOTTOM or add[j - a] == BOTTOM:
                                continue
                            if prev[a] + add[j - a] == rows_hist[ci][j]:
                                m = j - a
                                j = a
                                break
                        assert m is not None, "budget split lost"
                        val = add[m]
                    c = kids[ci]
                    me = min(m, self.cap[c])
                    cti, cs = self._pick_full_any(c, me, val)
                    stack.append((c, me, cti, cs))
            else:
                tau = ti
                x = tau + 1 if tau + 1 <= never else never
                bv = self.cap[v]
                unc = [[max(ffull[ci][m], sdisc[ci][m][x])
                        for m in range(bv + 1)] for ci in range(d)]
                early = [[pfull[ci][m][tau - 1] for m in range(bv + 1)]
                         for ci in range(d)]
                kmax = min(t_full, d)
                hist = _early_scan_rows(unc, early, bv, kmax)
                k, j = t_val, b
                for ci in range(d - 1, -1, -1):
                    c = kids[ci]
                    if ci == 0:
                        if k == 0:
                            m, val, kind = j, hist[0][0][j], "unc"
                        else:
                            assert k == 1, "early count cannot exceed one"
                            m, val, kind = j, hist[0][1][j], "early"
                    else:
                        prev = hist[ci - 1]
                        target = hist[ci][k][j]
                        m = val = kind = None
                        for a in range(j + 1):
                            pa = prev[k][a]
                            if pa != BOTTOM and unc[ci][j - a] != BOTTOM \
                                    and pa + unc[ci][j - a] == target:
                                m, val, kind = j - a, unc[ci][j - a], "unc"
                                j = a
                                break
                            if k >= 1:
                                pb = prev[k - 1][a]
                                if pb != BOTTOM and early[ci][j - a] != BOTTOM \
                                        and pb + early[ci][j - a] == target:
                                    m, val, kind = (j - a, early[ci][j - a],
                                                    "early")
                                    j = a
                                    k = k - 1
                                    break
                        assert m is not None, "budget split lost"
                    me = min(m, self.cap[c])
                    if kind == "unc":
                        cti, cs = self._pick_unconstrained(c, me, val, x)
                    else:
                        cti, cs = self._pick_early(c, me, val, tau)
                    stack.append((c, me, cti, cs))
        return seeds


def tree_tables(instance: Instance):
    """Forward DP tables plus budget caps and the effective round limit,
    exposed for table-shape property tests."""
    dp = _TreeDp(instance)
    return dp.tables, dp.cap, dp.lam


def solve_tree(instance: Instance) -> Solution:
    """Optimal seed set on a tree (paths included)."""
    cls = classify(instance.graph)
    if cls not in (GraphClass.TREE, GraphClass.PATH):
        raise ValueError(f"tree solver needs a tree, got {cls.value}")
    dp = _TreeDp(instance)
    root, ti, best = dp.root_choice()
    value = int(best)
    seeds = dp.backtrack(root, ti)
    return Solution(seeds=tuple(sorted(seeds)), influenced_count=value,
                    solver="tree")
