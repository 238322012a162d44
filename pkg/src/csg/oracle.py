"""Brute-force ground truth for small instances.

Enumerates feasible coalition structures exhaustively (restricted-growth
assignment of agents to parts) and derives the quantities the fast solvers
are tested against.  Deliberately independent of the DP machinery: the
only graph primitive used is the flood-fill connectivity test.
"""

from __future__ import annotations

import time
from typing import Iterator

from .graphs import CoalitionStructure, SynergyGraph
from .results import SolveResult
from .values import ValueModel

MAX_ENUM_AGENTS = 14
MAX_SCAN_AGENTS = 30


def feasible_partitions(g: SynergyGraph) -> Iterator[CoalitionStructure]:
    """Every partition of the agents whose parts are all feasible, in
    restricted-growth (canonical) order: agent 0 opens part 0 and each later
    agent joins an existing part or opens the next one, so parts are ordered
    by smallest member."""
    if g.n > MAX_ENUM_AGENTS:
        raise ValueError(
            f"partition enumeration refuses n={g.n} > {MAX_ENUM_AGENTS}"
        )
    feas_memo: dict[int, bool] = {}

    def feasible(mask: int) -> bool:
        ok = feas_memo.get(mask)
        if ok is None:
            ok = feas_memo[mask] = g.feasible_mask(mask)
        return ok

    prune = g.n > 10
    n = g.n
    parts: list[int] = []

    def extendable(mask: int, next_agent: int) -> bool:
        # a part can still become connected if all its members end up in
        # one component once every unassigned agent is available to it
        avail = mask | (((1 << n) - 1) >> next_agent << next_agent)
        for comp in g.component_masks(avail):
            if comp & mask == mask:
                return True
            if comp & mask:
                return False
        return False

    def assign(i: int) -> Iterator[list[int]]:
        if i == n:
            if all(feasible(p) for p in parts):
                yield list(parts)
            return
        bit = 1 << i
        for j in range(len(parts)):
            parts[j] |= bit
            if not prune or extendable(parts[j], i + 1):
                yield from assign(i + 1)
            parts[j] &= ~bit
        parts.append(bit)
        yield from assign(i + 1)
        parts.pop()

    for masks in assign(0):
        yield CoalitionStructure.from_masks(masks, n)


def solve_bruteforce(g: SynergyGraph, model: ValueModel) -> SolveResult:
    """Exhaustive optimum: argmax of structure value over all feasible
    partitions, first in canonical order winning ties."""
    t0 = time.perf_counter()
    best_val = None
    best_cs = None
    count = 0
    for cs in feasible_partitions(g):
        count += 1
        val = sum(model.value_of_mask(p.mask) for p in cs)
        if best_val is None or val > best_val:
            best_val = val
            best_cs = cs
    return SolveResult(
        algorithm="bruteforce",
        optimal_value=best_val,
        optimal_cs=best_cs,
        subproblems_stored=0,
        subspaces_evaluated=count,
        elapsed=time.perf_counter() - t0,
        instance={"n": g.n, "edges": len(g.edges)},
    )


def count_feasible_partitions(g: SynergyGraph) -> int:
    return sum(1 for _ in feasible_partitions(g))


def count_two_partitions(g: SynergyGraph) -> int:
    """Number of partitions of the universe into exactly two feasible parts.

    Trees admit the closed form n-1 (cutting one edge is the only way to
    split a tree into two connected halves); otherwise all subsets holding
    agent 0 are scanned with a connectivity test on both halves.
    """
    if g.is_tree():
        return g.n - 1
    if g.n > MAX_SCAN_AGENTS:
        raise ValueError(f"two-partition scan refuses n={g.n} > {MAX_SCAN_AGENTS}")
    if g.n == 1:
        return 0
    full = g.full_mask
    count = 0
    for rest in range(0, 1 << (g.n - 1)):
        c = (rest << 1) | 1
        if c == full:
            continue
        if g.feasible_mask(c) and g.feasible_mask(full & ~c):
            count += 1
    return count
