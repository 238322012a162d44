"""Pseudotree-hierarchical dynamic program for optimal coalition structures.

The solver walks agents from the last pseudotree position up to the root.
For each position it stores one subproblem per feasible coalition C that is
pinned there (C contains the position's agent, lies inside the position
suffix, and leaves a connected complement); coalitions containing the root
are only ever evaluated as the grand coalition.  A subproblem's value is
the best over its subspaces: each feasible subcoalition C' holding the
pinned agent contributes v(C') plus the already-solved subproblems of the
connected components of C \\ C'.

Counters: ``subproblems_stored`` = table entries created (two-partition
count + 1), ``subspaces_evaluated`` = executed subspace evaluations.

When the graph is a tree the subproblem pinned at agent a is exactly a's
pseudotree subtree and every component of C \\ C' is the full subtree of a
vertex adjacent to C'; the solver exploits both facts, which is what makes
thousand-agent bounded-degree instances tractable.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator, Optional

from .cse import _connected_masks
from .graphs import AgentSet, CoalitionStructure, SynergyGraph
from .pseudotree import Pseudotree, _build_masked, build_pseudotree, default_root
from .results import SolveResult
from .values import SeededRandom, ValueModel, cs_value

_NEG_INF = float("-inf")
_COMPONENT_MEMO_CAP = 1 << 18
_KERNEL_BATCH = 512

_tree_kernel = None


def _load_tree_kernel():
    """Compile (or fetch cached) the tree-instance subspace kernel."""
    global _tree_kernel
    if _tree_kernel is not None:
        return _tree_kernel
    import numpy as np
    from numba import njit

    @njit(cache=True)
    def _bidx(b):
        i = 0
        while b > 1:
            b >>= 1
            i += 1
        return i

    @njit(cache=True)
    def tree_pass(
        sub_masks, pins, start, stop, nbr, seed, scale, tie_last,
        p_by_agent, pvals, bests, s_st, x_st, nb_st, sz_st,
    ):
        """Evaluate subproblems [start, stop) of a tree instance with
        seeded-random values; returns subspaces evaluated.  Mirrors the
        interpreted tree path exactly: same enumeration order, same
        floating-point operation order."""
        spa = 0
        seed_u = np.uint64(seed)
        inv = np.float64(2.0) ** -64
        c1 = np.uint64(0xBF58476D1CE4E5B9)
        c2 = np.uint64(0x94D049BB133111EB)
        s30 = np.uint64(30)
        s27 = np.uint64(27)
        s31 = np.uint64(31)
        for si in range(start, stop):
            c = sub_masks[si]
            pin = pins[si]
            best_v = -np.inf
            best_c = np.int64(0)
            s = np.int64(1) << pin
            nb = nbr[pin]
            sz = 1
            top = 0
            s_st[0] = s
            x_st[0] = 0
            nb_st[0] = nb
            sz_st[0] = 1
            while True:
                # evaluate node (s, nb, sz): seeded value plus the stored
                # subtree values hanging off the boundary
                z = np.uint64(s)
                z = (z ^ (z >> s30)) * c1
                z = (z ^ (z >> s27)) * c2
                z = z ^ (z >> s31)
                z = z ^ seed_u
                z = (z ^ (z >> s30)) * c1
                z = (z ^ (z >> s27)) * c2
                z = z ^ (z >> s31)
                val = np.float64(z) * inv * scale * sz
                bb = nb & c & ~s
                while bb:
                    b = bb & -bb
                    bb ^= b
                    val += p_by_agent[_bidx(b)]
                spa += 1
                if val > best_v or (tie_last and val == best_v):
                    best_v = val
                    best_c = s
                # advance: descend into the next unexplored extension
                advanced = False
                while top >= 0:
                    st = s_st[top]
                    xt = x_st[top]
                    nbt = nb_st[top]
                    ext = nbt & c & ~(st | xt)
                    if ext == 0:
                        top -= 1
                        continue
                    v_bit = ext & -ext
                    x_st[top] = xt | v_bit
                    s = st | v_bit
                    nb = nbt | nbr[_bidx(v_bit)]
                    sz = sz_st[top] + 1
                    top += 1
                    s_st[top] = s
                    x_st[top] = xt | v_bit
                    nb_st[top] = nb
                    sz_st[top] = sz
                    advanced = True
                    break
                if not advanced:
                    break
            pvals[si] = best_v
            bests[si] = best_c
            p_by_agent[pin] = best_v
        return spa

    _tree_kernel = tree_pass
    return _tree_kernel


def _solve_tree_jit(
    g: SynergyGraph,
    model: SeededRandom,
    pt: Pseudotree,
    deadline: Optional[float],
    tie_last: bool,
) -> tuple["DpTables", int]:
    import numpy as np

    kernel = _load_tree_kernel()
    subs = list(_subproblem_masks(g, pt, tree_mode=True))
    sub_masks = np.array([c for c, _ in subs], dtype=np.int64)
    pins = np.array([p for _, p in subs], dtype=np.int64)
    nbr = np.asarray(g.nbr_masks, dtype=np.int64)
    p_by_agent = np.zeros(g.n, dtype=np.float64)
    pvals = np.empty(len(subs), dtype=np.float64)
    bests = np.empty(len(subs), dtype=np.int64)
    s_st = np.empty(g.n + 2, dtype=np.int64)
    x_st = np.empty(g.n + 2, dtype=np.int64)
    nb_st = np.empty(g.n + 2, dtype=np.int64)
    sz_st = np.empty(g.n + 2, dtype=np.int64)
    subspaces = 0
    for start in range(0, len(subs), _KERNEL_BATCH):
        if deadline is not None and time.perf_counter() > deadline:
            raise TimeoutError("solve exceeded its deadline")
        stop = min(start + _KERNEL_BATCH, len(subs))
        subspaces += int(
            kernel(
                sub_masks, pins, start, stop, nbr,
                np.uint64(model.seed & (2**64 - 1)), model.scale, tie_last,
                p_by_agent, pvals, bests, s_st, x_st, nb_st, sz_st,
            )
        )
    p = {int(m): float(v) for m, v in zip(sub_masks, pvals)}
    b = {int(m): int(c) for m, c in zip(sub_masks, bests)}
    return DpTables(p, b), subspaces


@dataclass
class DpTables:
    """Solver state: ``p`` maps subproblem mask to its best partition value,
    ``b`` to the coalition that achieved it."""

    p: dict
    b: dict

    def value_of(self, coalition: AgentSet) -> float:
        return self.p[coalition.mask]

    def best_of(self, coalition: AgentSet) -> AgentSet:
        return AgentSet.from_mask(self.b[coalition.mask])


def _is_tree_within(g: SynergyGraph, ground: int) -> bool:
    inner = 0
    m = ground
    while m:
        b = m & -m
        m ^= b
        inner += (g.nbr_masks[b.bit_length() - 1] & ground).bit_count()
    return inner // 2 == ground.bit_count() - 1


def _subtree_masks(pt: Pseudotree) -> dict[int, int]:
    sub = {a: 1 << a for a in pt.order}
    for a in reversed(pt.order):
        p = pt.parent.get(a)
        if p is not None:
            sub[p] |= sub[a]
    return sub


def _subproblem_masks(
    g: SynergyGraph, pt: Pseudotree, tree_mode: bool
) -> Iterator[tuple[int, int]]:
    """(mask, pinned agent) pairs in evaluation order: positions n..2, then
    the grand coalition pinned at the root."""
    ground = pt.ground_mask
    npos = len(pt)
    if tree_mode:
        # on a tree the only pinned coalition with a connected complement
        # is the pinned agent's entire pseudotree subtree
        subtree = _subtree_masks(pt)
        for k in range(npos, 1, -1):
            a = pt.agent_at(k)
            yield subtree[a], a
    else:
        nbr = g.nbr_masks
        feasible = g.feasible_mask
        for k in range(npos, 1, -1):
            a = pt.agent_at(k)
            suffix = pt.suffix_mask(k)
            for c, _nb in _connected_masks(nbr, suffix, 1 << a):
                if feasible(ground & ~c):
                    yield c, a
    yield ground, pt.root


def enumerate_subproblems(
    g: SynergyGraph, pt: Pseudotree
) -> Iterator[tuple[AgentSet, int]]:
    """Public view of the subproblem schedule for a connected instance."""
    tree_mode = _is_tree_within(g, pt.ground_mask)
    for mask, pin in _subproblem_masks(g, pt, tree_mode):
        yield AgentSet.from_mask(mask), pin


def _solve_on(
    g: SynergyGraph,
    model: ValueModel,
    pt: Pseudotree,
    deadline: Optional[float],
    tie_last: bool,
) -> tuple[DpTables, int]:
    nbr = g.nbr_masks
    vof = model.value_of_mask
    tree_mode = _is_tree_within(g, pt.ground_mask)
    if (
        tree_mode
        and g.n <= 63
        and type(model) is SeededRandom
        and pt.ground_mask == g.full_mask
    ):
        return _solve_tree_jit(g, model, pt, deadline, tie_last)
    P: dict[int, float] = {}
    B: dict[int, int] = {}
    p_by_agent: list = [None] * g.n  # tree mode: subproblem value by subtree root
    comp_memo: dict[int, tuple] = {}
    component_masks = g.component_masks
    subspaces = 0
    for c_mask, pin in _subproblem_masks(g, pt, tree_mode):
        if deadline is not None and time.perf_counter() > deadline:
            raise TimeoutError("solve exceeded its deadline")
        best_v = _NEG_INF
        best_c = 0
        pin_bit = 1 << pin
        if tree_mode:
            for cp, nb in _connected_masks(nbr, c_mask, pin_bit):
                v = vof(cp)
                bb = nb & c_mask & ~cp
                while bb:
                    b = bb & -bb
                    bb ^= b
                    v += p_by_agent[b.bit_length() - 1]
                subspaces += 1
                if v > best_v or (tie_last and v == best_v):
                    best_v = v
                    best_c = cp
            p_by_agent[pin] = best_v
        else:
            for cp, _nb in _connected_masks(nbr, c_mask, pin_bit):
                v = vof(cp)
                rest = c_mask & ~cp
                if rest:
                    comps = comp_memo.get(rest)
                    if comps is None:
                        comps = tuple(component_masks(rest))
                        if len(comp_memo) < _COMPONENT_MEMO_CAP:
                            comp_memo[rest] = comps
                    for k in comps:
                        v += P[k]
                subspaces += 1
                if v > best_v or (tie_last and v == best_v):
                    best_v = v
                    best_c = cp
        P[c_mask] = best_v
        B[c_mask] = best_c
    return DpTables(P, B), subspaces


def _best_parts_masks(tables: DpTables, g: SynergyGraph, c_mask: int) -> list[int]:
    parts = []
    stack = [c_mask]
    b_table = tables.b
    while stack:
        c = stack.pop()
        try:
            best = b_table[c]
        except KeyError:
            raise RuntimeError(
                f"corrupt DP tables: no entry for subproblem {c:#x}"
            ) from None
        parts.append(best)
        rest = c & ~best
        if rest:
            stack.extend(g.component_masks(rest))
    return parts


def best_cs(tables: DpTables, g: SynergyGraph, coalition: AgentSet) -> list[AgentSet]:
    """Unwind the argmax tables into the best partition of a stored
    subproblem: the coalition itself when it was kept whole, otherwise its
    best subcoalition plus the best partitions of the leftover components."""
    return [
        AgentSet.from_mask(m) for m in _best_parts_masks(tables, g, coalition.mask)
    ]


def solve_dype(
    g: SynergyGraph,
    model: ValueModel,
    pt: Optional[Pseudotree] = None,
    root: Optional[int] = None,
    deadline: Optional[float] = None,
    tie_last: bool = False,
) -> SolveResult:
    """Optimal coalition structure of a connected instance.

    ``pt`` (or ``root``) fixes the pseudotree; by default the highest-degree
    agent is the root.  Raises on disconnected graphs - use
    :func:`solve_dype_multi` there.
    """
    t0 = time.perf_counter()
    if pt is None:
        if not g.is_connected():
            raise ValueError("graph is disconnected; use solve_dype_multi")
        pt = build_pseudotree(g, root)
    elif pt.ground_mask != g.full_mask:
        raise ValueError("pseudotree does not span the whole graph")
    tables, subspaces = _solve_on(g, model, pt, deadline, tie_last)
    cs = CoalitionStructure.from_masks(
        _best_parts_masks(tables, g, pt.ground_mask), g.n
    )
    return SolveResult(
        algorithm="dype",
        optimal_value=cs_value(model, cs),
        optimal_cs=cs,
        subproblems_stored=len(tables.p),
        subspaces_evaluated=subspaces,
        elapsed=time.perf_counter() - t0,
        instance={"n": g.n, "edges": len(g.edges), "root": pt.root},
    )


def solve_dype_multi(
    g: SynergyGraph,
    model: ValueModel,
    deadline: Optional[float] = None,
) -> SolveResult:
    """Decomposition wrapper: one pseudotree and one solve per connected
    component of the graph, results combined."""
    t0 = time.perf_counter()
    part_masks: list[int] = []
    subproblems = 0
    subspaces = 0
    roots = []
    for comp in g.component_masks(g.full_mask):
        root = default_root(g, within=comp)
        pt = _build_masked(g, root, comp)
        tables, spa = _solve_on(g, model, pt, deadline, tie_last=False)
        part_masks.extend(_best_parts_masks(tables, g, comp))
        subproblems += len(tables.p)
        subspaces += spa
        roots.append(root)
    cs = CoalitionStructure.from_masks(part_masks, g.n)
    return SolveResult(
        algorithm="dype",
        optimal_value=cs_value(model, cs),
        optimal_cs=cs,
        subproblems_stored=subproblems,
        subspaces_evaluated=subspaces,
        elapsed=time.perf_counter() - t0,
        instance={"n": g.n, "edges": len(g.edges), "roots": roots},
    )
