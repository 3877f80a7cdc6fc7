"""Fast exact solver for path instances.

The solver first strips everything that activates without any seed: each
zero-threshold node ignites at round 1 and walks outward one node per
round through threshold-1 chains.  Stripped nodes are counted for free;
a surviving node next to a stripped one whose help still lands within the
round budget gets its threshold lowered by one.  The survivors split into
independent segments, each solved for every budget by a left-to-right
table, and the per-segment results are recombined by a budget scan.

Seeding a stripped zero directly is occasionally worth a budget unit: it
buys a one-round speedup on both of its chains, which matters exactly
when a chain reaches a neighbor at the round boundary.  Those options are
kept as explicit "boost" items in the recombination.

Segment table semantics, for positions 1..m and budgets 0..b:

    F[i][r, b]   best count over positions 1..i+r where the r nodes right
                 of i form a threshold-1 chain that only node i can feed,
                 with node i at its own threshold;
    D[i][b]      same with r = 0 and node i discounted by one (an
                 already-active right neighbor), only ever read right
                 after a seeded node's leftward chain;
    choice bits  True where the "seed node i" branch attained the value.

Optional variants used by the cycle solver on zero-free paths:

    FL/DL        as F/D but only over configurations that activate
                 position 1 no later than round lam - 1;
    G[i][b]      as FL but the chain pending right of i runs to the last
                 position, which must also activate by round lam - 1.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import GraphClass, classify, path_order
from .instance import Instance, Solution, normalize_thresholds

NEG = float("-inf")
FULL = 1
DISC = 0


# ---------------------------------------------------------------------------
# zero-threshold preprocessing
# ---------------------------------------------------------------------------

def _path_closure(th, lam: int):
    """Activation round of every position with an empty seed set."""
    n = len(th)
    rho: list = [None] * n
    if lam == 0:
        return rho
    counts = [0] * n
    frontier = [i for i in range(n) if th[i] == 0]
    for i in frontier:
        rho[i] = 1
    tau = 1
    while frontier and tau < lam:
        tau += 1
        nxt = []
        for u in frontier:
            for v in (u - 1, u + 1):
                if 0 <= v < n:
                    counts[v] += 1
                    if rho[v] is None and counts[v] >= th[v]:
                        rho[v] = tau
                        nxt.append(v)
        frontier = nxt
    return rho


@dataclass
class _Seg:
    start: int              # original position of the first node
    th: list[int]           # thresholds with boundary reductions applied


@dataclass
class _Boost:
    zero: int               # original position of the seedable zero
    dec_prev: bool          # lowers the previous segment's last node
    dec_next: bool          # lowers the next segment's first node
    tied: bool = False      # shares its budget charge with a twin item


@dataclass
class _Prep:
    auto: int
    rho: list
    items: list             # ordered ("seg", _Seg) / ("boost", _Boost)
    cells: int = 0


def preprocess_zeros(th, lam: int, tied_ends: bool = False) -> _Prep:
    """Strip free activations from a path and plan the remaining work."""
    n = len(th)
    rho = _path_closure(th, lam)
    auto = sum(1 for r in rho if r is not None)
    items: list = []
    i = 0
    while i < n:
        if rho[i] is None:
            j = i
            while j + 1 < n and rho[j + 1] is None:
                j += 1
            seg_th = list(th[i:j + 1])
            if i - 1 >= 0 and rho[i - 1] <= lam - 1:
                seg_th[0] -= 1
            if j + 1 < n and rho[j + 1] <= lam - 1:
                seg_th[-1] -= 1
            assert all(t >= 1 for t in seg_th), "stripped node left behind"
            items.append(("seg", _Seg(start=i, th=seg_th)))
            i = j + 1
        else:
            j = i
            while j + 1 < n and rho[j + 1] is not None:
                j += 1
            zeros = [p for p in range(i, j + 1) if th[p] == 0]
            if len(zeros) == 1:
                dec_prev = i - 1 >= 0 and rho[i] == lam
                dec_next = j + 1 < n and rho[j] == lam
                tied = tied_ends and (i == 0 or j == n - 1)
                if dec_prev or dec_next or tied:
                    items.append(("boost", _Boost(zeros[0], dec_prev,
                                                  dec_next, tied)))
            i = j + 1
    return _Prep(auto=auto, rho=rho, items=items)


# ---------------------------------------------------------------------------
# single-segment tables
# ---------------------------------------------------------------------------

class _SegDp:
    """Budgeted left-to-right tables over one all-positive segment."""

    def __init__(self, th, lam: int, bcap: int,
                 left_early: bool = False, tight: bool = False):
        self.th = th
        self.lam = lam
        self.b = bcap
        m = self.m = len(th)
        assert all(1 <= t <= 3 for t in th), "segment threshold out of range"

        lrun = [0] * (m + 1)
        for i in range(2, m + 1):
            lrun[i] = lrun[i - 1] + 1 if th[i - 2] == 1 else 0
        self.lrun = lrun

        # highest chain row each position must expose to its right neighbor
        rneed = [0] * (m + 1)
        for i in range(m - 1, -1, -1):
            t_next = th[i]
            if t_next == 1:
                rneed[i] = min(lam, rneed[i + 1] + 1)
            elif t_next == 2 and lam >= 1:
                rneed[i] = 1
        self.rneed = rneed

        B = bcap
        self.F = [np.zeros((rneed[0] + 1, B + 1), dtype=np.int64)]
        self.D = [np.zeros(B + 1, dtype=np.int64)]
        self.cF = [None]
        self.cD = [None]
        self.cells = 0
        self.left_early = left_early
        self.tight = tight
        if left_early:
            self.FL = [np.full((rneed[0] + 1, B + 1), NEG)]
            self.DL = [np.full(B + 1, NEG)]
            self.cFL = [None]
            self.cDL = [None]
        if tight:
            trail = 0
            while trail < m and th[m - 1 - trail] == 1:
                trail += 1
            self.g_from = m - trail   # G[i] meaningful for i >= g_from
            self.G = [np.full(B + 1, NEG)]
            self.cG = [None]

        for i in range(1, m + 1):
            t = th[i - 1]
            ell = min(lam, lrun[i])
            j = i - ell - 1
            rows = rneed[i] + 1
            self.cells += rows * (B + 1) + (B + 1)

            base = self.D[j] if ell < lam else self.F[j][0]
            m0 = np.full((rows, B + 1), -1, dtype=np.int64)
            m0[:, 1:] = base[None, :-1] + (ell + 1) \
                + np.arange(rows, dtype=np.int64)[:, None]
            if t > 1:
                m1 = np.broadcast_to(self.F[i - 1][0], (rows, B + 1))
            else:
                idx = np.minimum(lam, np.arange(rows) + 1)
                assert idx.max(initial=0) <= self.rneed[i - 1]
                m1 = self.F[i - 1][idx]
            cur = np.maximum(m0, m1)
            ch = m0 >= m1
            cur[:, 0] = 0
            ch[:, 0] = False
            self.F.append(cur)
            self.cF.append(ch)

            td = max(t - 1, 0)
            if td > 1:
                m1d = self.F[i - 1][0]
            else:
                m1d = self.F[i - 1][min(lam, 1)]
            dcur = np.maximum(m0[0], m1d)
            dch = m0[0] >= m1d
            dcur[0] = 0
            dch[0] = False
            self.D.append(dcur)
            self.cD.append(dch)

            if left_early:
                if j == 0:
                    gate = np.full(B + 1, NEG)
                    if i - 1 <= lam - 1:
                        gate[:] = 0.0
                    else:
                        gate[1:] = 0.0   # budget buys a seed on position 1
                    baseL = gate
                else:
                    baseL = self.DL[j] if ell < lam else self.FL[j][0]
                m0L = np.full((rows, B + 1), NEG)
                m0L[:, 1:] = baseL[None, :-1] + (ell + 1) \
                    + np.arange(rows)[:, None]
                if t > 1:
                    m1L = np.broadcast_to(self.FL[i - 1][0], (rows, B + 1))
                else:
                    idx = np.minimum(lam, np.arange(rows) + 1)
                    m1L = self.FL[i - 1][idx]
                curL = np.maximum(m0L, m1L)
                chL = m0L >= m1L
                curL[:, 0] = NEG
                chL[:, 0] = False
                self.FL.append(curL)
                self.cFL.append(chL)
                if td > 1:
                    m1dL = self.FL[i - 1][0]
                else:
                    m1dL = self.FL[i - 1][min(lam, 1)]
                dcurL = np.maximum(m0L[0], m1dL)
                dchL = m0L[0] >= m1dL
                dcurL[0] = NEG
                dchL[0] = False
                self.DL.append(dcurL)
                self.cDL.append(dchL)
                self.cells += rows * (B + 1) + (B + 1)

            if tight:
                rt = m - i
                if i >= self.g_from or i == m:
                    if left_early:
                        if j == 0:
                            gate = np.full(B + 1, NEG)
                            if i - 1 <= lam - 1:
                                gate[:] = 0.0
                            else:
                                gate[1:] = 0.0
                            baseT = gate
                        else:
                            baseT = self.DL[j] if ell < lam else self.FL[j][0]
                    else:
                        baseT = base.astype(float)
                    m0g = np.full(B + 1, NEG)
                    if rt <= lam - 1:
                        m0g[1:] = baseT[:-1] + (ell + 1 + rt)
                    m1g = self.G[i - 1] if t == 1 else np.full(B + 1, NEG)
                    gcur = np.maximum(m0g, m1g)
                    gch = m0g >= m1g
                    gcur[0] = NEG
                    gch[0] = False
                else:
                    gcur = np.full(B + 1, NEG)
                    gch = None
                self.G.append(gcur)
                self.cG.append(gch)
                self.cells += B + 1

    # -- reads ------------------------------------------------------------

    def values(self) -> np.ndarray:
        return self.F[self.m][0]

    def values_both_ends_early(self) -> np.ndarray:
        assert self.left_early and self.tight
        return self.G[self.m]

    # -- reconstruction ---------------------------------------------------

    def backtrack(self, budget: int) -> list[int]:
        """Seeded positions (1-indexed) realizing F[m][0, budget]."""
        return self._walk(self.m, budget, 0, FULL, self.cF, self.cD,
                          gated=False)

    def backtrack_both_ends_early(self, budget: int) -> list[int]:
        seeds = []
        i, b = self.m, budget
        while i >= 1:
            ch = self.cG[i]
            assert ch is not None, "walked into an undefined chain row"
            if ch[b]:
                seeds.append(i)
                ell = min(self.lam, self.lrun[i])
                j = i - ell - 1
                slot = DISC if ell < self.lam else FULL
                b -= 1
                if j == 0:
                    if not (i - 1 <= self.lam - 1):
                        seeds.append(1)
                    return seeds
                return seeds + self._walk(j, b, 0, slot, self.cFL, self.cDL,
                                          gated=True)
            i -= 1
        raise AssertionError("tight chain never resolved")

    def _walk(self, i, b, r, slot, cF, cD, gated: bool) -> list[int]:
        seeds = []
        lam = self.lam
        while i >= 1 and b >= 1:
            ch = cF[i][r, b] if slot == FULL else cD[i][b]
            t = self.th[i - 1]
            if ch:
                seeds.append(i)
                ell = min(lam, self.lrun[i])
                j = i - ell - 1
                slot = DISC if ell < lam else FULL
                b -= 1
                if gated and j == 0:
                    if not (i - 1 <= lam - 1):
                        seeds.append(1)
                    return seeds
                i, r = j, 0
            else:
                tv = t if slot == FULL else max(t - 1, 0)
                if slot == DISC:
                    r = 0
                r = 0 if tv > 1 else min(lam, r + 1)
                i -= 1
                slot = FULL
        assert not gated or i == 0, "early-start walk fell off the table"
        return seeds


# ---------------------------------------------------------------------------
# segment variants and the budget-allocation chain
# ---------------------------------------------------------------------------

@dataclass
class _Variant:
    vals: list              # value per budget 0..B, drops included
    dp: object              # _SegDp or None when nothing remains
    drops: int
    shift: int              # original-position shift caused by a left drop
    seg: _Seg = None


def _build_variant(seg: _Seg, ldec: bool, rdec: bool, lam: int,
                   B: int) -> _Variant:
    th = list(seg.th)
    drops = 0
    shift = 0
    if ldec and th:
        th[0] -= 1
        if th[0] == 0:
            th.pop(0)
            drops += 1
            shift = 1
    if rdec and th:
        th[-1] -= 1
        if th[-1] == 0:
            th.pop()
            drops += 1
    if not th:
        return _Variant([drops] * (B + 1), None, drops, shift, seg)
    bcap = min(B, len(th))
    dp = _SegDp(th, lam, bcap)
    base = dp.values()
    vals = [drops + int(base[min(j, bcap)]) for j in range(B + 1)]
    return _Variant(vals, dp, drops, shift, seg)


class _Chain:
    """Budget allocation across segments plus boost decisions."""

    def __init__(self, prep: _Prep, lam: int, B: int, forced_bit=None):
        self.prep = prep
        self.lam = lam
        self.B = B
        self.forced_bit = forced_bit
        self._variants: dict = {}
        self.cells = 0
        self._run()

    def _variant(self, seg: _Seg, ldec: bool, rdec: bool) -> _Variant:
        key = (id(seg), ldec, rdec)
        out = self._variants.get(key)
        if out is None:
            out = _build_variant(seg, ldec, rdec, self.lam, self.B)
            if out.dp is not None:
                self.cells += out.dp.cells
            self._variants[key] = out
        return out

    def _fold(self, states, seg: _Seg, rdec: bool):
        """Allocate budget to one segment; returns (vector, choice record)."""
        B = self.B
        new_vec = [NEG] * (B + 1)
        rec = {}
        for key, vec in states.items():
            var = self._variant(seg, key, rdec)
            for j in range(B + 1):
                best, bx = new_vec[j], None
                for x in range(j + 1):
                    v = vec[j - x] + var.vals[x]
                    if v > best:
                        best, bx = v, x
                if bx is not None:
                    new_vec[j] = best
                    rec[j] = (key, bx)
        return new_vec, rec

    def _run(self):
        B = self.B
        states = {False: [0.0] * (B + 1)}
        trace = []
        pending: _Seg | None = None
        for kind, payload in self.prep.items:
            if kind == "seg":
                if pending is not None:
                    vec, rec = self._fold(states, pending, rdec=False)
                    trace.append(("seg", pending, False, rec))
                    states = {False: vec}
                pending = payload
            else:
                bst: _Boost = payload
                if bst.tied:
                    bits = (False, True) if self.forced_bit is None \
                        else (self.forced_bit,)
                else:
                    bits = (False, True)
                new_states = {}
                recs = {}
                for bit in bits:
                    cost = 0 if (bst.tied or not bit) else 1
                    for key, vec in states.items():
                        if pending is not None:
                            fv, rec = self._fold({key: vec}, pending,
                                                 rdec=bit and bst.dec_prev)
                        else:
                            fv, rec = vec, None
                        nk = bit and bst.dec_next
                        tgt = new_states.setdefault(nk, [NEG] * (B + 1))
                        for j in range(cost, B + 1):
                            v = fv[j - cost]
                            if v > tgt[j]:
                                tgt[j] = v
                                recs[(nk, j)] = (bit, key, rec, j - cost)
                states = new_states
                trace.append(("boost", pending, bst, recs))
                pending = None
        if pending is not None:
            vec, rec = self._fold(states, pending, rdec=False)
            trace.append(("seg", pending, False, rec))
            states = {False: vec}
        self.trace = trace
        self.states = states
        vec = [NEG] * (B + 1)
        for v in states.values():
            vec = [max(a, b) for a, b in zip(vec, v)]
        self.vec = vec

    def value(self, budget: int) -> int:
        return int(self.vec[budget])

    def reconstruct(self, budget: int):
        """Seed positions (original path coordinates) plus boosted zeros."""
        j = budget
        key = None
        for k, v in self.states.items():
            if v[j] == self.vec[j]:
                key = k
                break
        assert key is not None, "no chain state matches the reported value"
        positions = []
        for step in reversed(self.trace):
            if step[0] == "seg":
                _, seg, rdec, rec = step
                pkey, x = rec[j]
                positions += self._seg_seeds(seg, pkey, rdec, x)
                j -= x
                key = pkey
            else:
                _, pend, bst, recs = step
                bit, pkey, rec, jprev = recs[(key, j)]
                if bit:
                    positions.append(bst.zero)
                if pend is not None:
                    skey, x = rec[jprev]
                    positions += self._seg_seeds(pend, skey,
                                                 bit and bst.dec_prev, x)
                    j = jprev - x
                    key = skey
                else:
                    j = jprev
                    key = pkey
        return positions

    def _seg_seeds(self, seg: _Seg, ldec: bool, rdec: bool, x: int):
        var = self._variant(seg, ldec, rdec)
        if var.dp is None or x == 0:
            return []
        inner = var.dp.backtrack(min(x, var.dp.b))
        return [seg.start + var.shift + (i - 1) for i in inner]


# ---------------------------------------------------------------------------
# public interface
# ---------------------------------------------------------------------------

def solve_path_positions(th, lam: int, beta: int, tied_ends: bool = False):
    """Solve a path given positionally; returns (value, seeds, stats).

    With ``tied_ends`` the first and last zero (expected to be copies of
    one physical node) are boosted together for a single budget unit.
    """
    n = len(th)
    B = min(beta, n)
    if lam == 0:
        return min(B, n), list(range(min(B, n))), 0
    prep = preprocess_zeros(th, lam, tied_ends=tied_ends)
    if tied_ends:
        chain0 = _Chain(prep, lam, B, forced_bit=False)
        best = prep.auto + chain0.value(B)
        picked = (chain0, B, False)
        if B >= 1:
            chain1 = _Chain(prep, lam, B, forced_bit=True)
            v1 = prep.auto + chain1.value(B - 1) + 0
            if v1 > best:
                best = v1
                picked = (chain1, B - 1, True)
        chain, j, bit = picked
        seeds = chain.reconstruct(j)
        return best, seeds, chain.cells
    chain = _Chain(prep, lam, B)
    value = prep.auto + chain.value(B)
    seeds = chain.reconstruct(B)
    return value, seeds, chain.cells


def solve_path(instance: Instance) -> Solution:
    """Optimal seed set on a path."""
    cls = classify(instance.graph)
    if cls != GraphClass.PATH:
        raise ValueError(f"path solver needs a path, got {cls.value}")
    inst = normalize_thresholds(instance)
    order = path_order(inst.graph)
    th = [inst.thresholds[u] for u in order]
    value, positions, _ = solve_path_positions(th, inst.lam, inst.beta)
    seeds = tuple(sorted(order[p] for p in positions))
    return Solution(seeds=seeds, influenced_count=value, solver="path")
