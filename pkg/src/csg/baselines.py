"""Reference solvers: classic DP, IDP, and the graph-restricted DyCE.

DP and IDP keep the full 2^n table and are therefore capped at a dense
limit (default 25 agents); their split loops run as compiled numba kernels
since the classic search touches on the order of 3^n subspaces.  DyCE
stores one entry per feasible coalition and runs in plain Python.

All three report the same counters as the hierarchical solver:
table entries stored and subspace evaluations executed.
"""

from __future__ import annotations

import time
from typing import Optional

import numpy as np

from .cse import _connected_masks
from .graphs import CoalitionStructure, SynergyGraph
from .results import SolveResult
from .values import ValueModel, cs_value

DENSE_LIMIT = 25

_kernels = None


def _load_kernels():
    """Compile (or fetch cached) numba kernels on first use."""
    global _kernels
    if _kernels is not None:
        return _kernels
    from numba import njit

    @njit(cache=True)
    def _bit_index(b):
        i = 0
        while b > 1:
            b >>= 1
            i += 1
        return i

    @njit(cache=True)
    def feas_table(n, nbr, out):
        for mask in range(1, 1 << n):
            comp = mask & -mask
            frontier = comp
            while frontier:
                grow = 0
                f = frontier
                while f:
                    b = f & -f
                    f ^= b
                    grow |= nbr[_bit_index(b)]
                frontier = grow & mask & ~comp
                comp |= frontier
            out[mask] = 1 if comp == mask else 0

    @njit(cache=True)
    def split_pass(masks, feas, vtab, pop, p, best, n_agents, idp):
        """One size class of the classic split recurrence; returns the
        number of subspaces evaluated."""
        ns = 0
        limit = n_agents
        for idx in range(masks.shape[0]):
            c = masks[idx]
            s = pop[c]
            best_v = -np.inf
            best_split = np.int64(0)
            if feas[c]:
                best_v = vtab[c]
                ns += 1
            low = c & -c
            rest = c ^ low
            r = rest
            while True:
                if r != rest:
                    sub = low | r
                    other = c ^ sub
                    ok = True
                    if idp and s != limit:
                        k = pop[sub]
                        l = pop[other]
                        big = k if k > l else l
                        if big > limit - s:
                            ok = False
                    if ok:
                        v = p[sub] + p[other]
                        ns += 1
                        if v > best_v:
                            best_v = v
                            best_split = sub
                if r == 0:
                    break
                r = (r - 1) & rest
            p[c] = best_v
            best[c] = best_split
        return ns

    _kernels = (feas_table, split_pass)
    return _kernels


def _popcount_table(n: int) -> np.ndarray:
    pop = np.zeros(1, dtype=np.uint8)
    for _ in range(n):
        pop = np.concatenate([pop, pop + 1])
    return pop


def feasibility_table(g: SynergyGraph) -> np.ndarray:
    """Dense feasibility table over all 2^n masks (uint8 flags)."""
    if g.n > DENSE_LIMIT:
        raise ValueError(f"dense tables refuse n={g.n} > {DENSE_LIMIT}")
    feas_table, _ = _load_kernels()
    nbr = np.asarray(g.nbr_masks, dtype=np.int64)
    out = np.zeros(1 << g.n, dtype=np.uint8)
    feas_table(g.n, nbr, out)
    return out


def _value_table(g: SynergyGraph, model: ValueModel, feas: np.ndarray) -> np.ndarray:
    vtab = np.zeros(1 << g.n, dtype=np.float64)
    vof = model.value_of_mask
    for mask in np.nonzero(feas)[0]:
        vtab[mask] = vof(int(mask))
    return vtab


def _solve_dense(
    g: SynergyGraph,
    model: ValueModel,
    idp: bool,
    deadline: Optional[float],
) -> SolveResult:
    t0 = time.perf_counter()
    n = g.n
    if n > DENSE_LIMIT:
        raise ValueError(
            f"classic DP needs a 2^n table; n={n} exceeds the limit {DENSE_LIMIT}"
        )
    _, split_pass = _load_kernels()
    feas = feasibility_table(g)
    vtab = _value_table(g, model, feas)
    pop = _popcount_table(n)
    p = np.full(1 << n, -np.inf, dtype=np.float64)
    best = np.zeros(1 << n, dtype=np.int64)
    all_masks = np.arange(1, 1 << n, dtype=np.int64)
    by_size = np.argsort(pop[1:], kind="stable")  # ascending size, then mask
    subspaces = 0
    start = 0
    for size in range(1, n + 1):
        if deadline is not None and time.perf_counter() > deadline:
            raise TimeoutError("solve exceeded its deadline")
        stop = start
        while stop < by_size.shape[0] and pop[all_masks[by_size[stop]]] == size:
            stop += 1
        chunk = all_masks[by_size[start:stop]]
        subspaces += int(split_pass(chunk, feas, vtab, pop, p, best, n, idp))
        start = stop
    cs = CoalitionStructure.from_masks(_backtrack_split(best, g.full_mask), n)
    return SolveResult(
        algorithm="idp" if idp else "dp",
        optimal_value=cs_value(model, cs),
        optimal_cs=cs,
        subproblems_stored=(1 << n) - 1,
        subspaces_evaluated=subspaces,
        elapsed=time.perf_counter() - t0,
        instance={"n": n, "edges": len(g.edges)},
    )


def _backtrack_split(best, full_mask: int) -> list[int]:
    parts = []
    stack = [full_mask]
    while stack:
        c = stack.pop()
        sub = int(best[c])
        if sub == 0:
            parts.append(c)
        else:
            stack.append(sub)
            stack.append(c ^ sub)
    return parts


def solve_dp(
    g: SynergyGraph, model: ValueModel, deadline: Optional[float] = None
) -> SolveResult:
    """Classic size-ordered DP over all 2^n coalitions (feasible coalitions
    contribute their own value; every unordered split is evaluated)."""
    return _solve_dense(g, model, idp=False, deadline=deadline)


def solve_idp(
    g: SynergyGraph, model: ValueModel, deadline: Optional[float] = None
) -> SolveResult:
    """Classic DP with the standard split-size pruning rule: a split of C is
    evaluated only when |C| = n or its larger half fits in n - |C|."""
    return _solve_dense(g, model, idp=True, deadline=deadline)


def solve_dyce(
    g: SynergyGraph, model: ValueModel, deadline: Optional[float] = None
) -> SolveResult:
    """Graph-restricted DP: one table entry per feasible coalition, size
    order, splits limited to pairs of feasible halves."""
    t0 = time.perf_counter()
    nbr = g.nbr_masks
    vof = model.value_of_mask

    feasible: list[int] = []
    rest = g.full_mask
    while rest:
        pin_bit = rest & -rest
        for mask, _ in _connected_masks(nbr, rest, pin_bit):
            feasible.append(mask)
        rest ^= pin_bit
    feasible.sort(key=lambda m: (m.bit_count(), m))
    fset = set(feasible)

    p: dict[int, float] = {}
    best: dict[int, int] = {}
    subspaces = 0
    for c in feasible:
        if deadline is not None and time.perf_counter() > deadline:
            raise TimeoutError("solve exceeded its deadline")
        best_v = vof(c)
        best_split = 0
        subspaces += 1
        if c & (c - 1):  # at least two members
            low = c & -c
            for sub, _ in _connected_masks(nbr, c, low):
                if sub == c:
                    continue
                other = c ^ sub
                if other in fset:
                    v = p[sub] + p[other]
                    subspaces += 1
                    if v > best_v:
                        best_v = v
                        best_split = sub
        p[c] = best_v
        best[c] = best_split

    parts: list[int] = []
    stack = list(g.component_masks(g.full_mask))
    while stack:
        c = stack.pop()
        sub = best[c]
        if sub == 0:
            parts.append(c)
        else:
            stack.append(sub)
            stack.append(c ^ sub)
    cs = CoalitionStructure.from_masks(parts, g.n)
    return SolveResult(
        algorithm="dyce",
        optimal_value=cs_value(model, cs),
        optimal_cs=cs,
        subproblems_stored=len(p),
        subspaces_evaluated=subspaces,
        elapsed=time.perf_counter() - t0,
        instance={"n": g.n, "edges": len(g.edges)},
    )
