"""Pseudotree orderings of a synergy graph.

A pseudotree is a rooted spanning tree whose tree edges are graph edges
(edge-traversal) and in which every graph edge joins an ancestor to a
descendant.  Depth-first traversal produces one: DFS trees of undirected
graphs have no cross edges.  The agent ordering used by the hierarchical
solver is the DFS preorder, root at position 1, so a coalition's order is
the smallest position among its members.
"""

from __future__ import annotations

from typing import Optional

from .graphs import AgentSet, SynergyGraph, iter_bits


class Pseudotree:
    """Rooted DFS tree plus the derived preorder positions.

    ``order`` maps position-1 (0-based index) to agent; ``position`` maps
    agent to its 1-based position; ``parent`` maps each non-root agent to
    its tree parent.  ``ground_mask`` is the set of agents covered (the
    whole universe unless built for one connected component).
    """

    __slots__ = ("root", "parent", "order", "position", "ground_mask", "_suffix")

    def __init__(self, root, parent, order, ground_mask):
        self.root = root
        self.parent = parent
        self.order = order
        self.position = {a: k + 1 for k, a in enumerate(order)}
        self.ground_mask = ground_mask
        # suffix masks: _suffix[k] = agents at positions > k (1-based k)
        suf = [0] * (len(order) + 1)
        for k in range(len(order), 0, -1):
            suf[k - 1] = suf[k] | (1 << order[k - 1])
        self._suffix = suf

    def __len__(self) -> int:
        return len(self.order)

    def suffix_mask(self, k: int) -> int:
        """Bitmask of agents at positions >= k (1-based)."""
        return self._suffix[k - 1]

    def agent_at(self, k: int) -> int:
        """Agent occupying 1-based position ``k``."""
        return self.order[k - 1]

    def dump(self) -> str:
        """Textual form, one agent per line: position, agent, parent."""
        lines = []
        for k, a in enumerate(self.order, start=1):
            p = self.parent.get(a)
            lines.append(f"{k}\t{a}\t{'-' if p is None else p}")
        return "\n".join(lines)


def default_root(g: SynergyGraph, within: Optional[int] = None) -> int:
    """Root heuristic: highest degree, ties broken by lowest index."""
    members = iter_bits(g.full_mask if within is None else within)
    return max(members, key=lambda a: (g.degree(a), -a))


def _build_masked(g: SynergyGraph, root: int, ground: int) -> Pseudotree:
    nbr = g.nbr_masks
    parent: dict[int, int] = {}
    order: list[int] = []
    visited = 0
    # (agent, parent) pairs; re-pushed entries are skipped once visited,
    # which reproduces recursive DFS with ascending neighbor order
    stack = [(root, -1)]
    while stack:
        a, p = stack.pop()
        bit = 1 << a
        if visited & bit:
            continue
        visited |= bit
        order.append(a)
        if p >= 0:
            parent[a] = p
        todo = nbr[a] & ground & ~visited
        for b in reversed(list(iter_bits(todo))):
            stack.append((b, a))
    if visited != ground:
        raise ValueError(
            "graph is disconnected; build one pseudotree per component"
        )
    return Pseudotree(root, parent, tuple(order), ground)


def build_pseudotree(g: SynergyGraph, root: Optional[int] = None) -> Pseudotree:
    """DFS pseudotree of a connected graph, neighbors visited in ascending
    index order.  Raises if the graph is disconnected."""
    if root is None:
        root = default_root(g)
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} out of range for n={g.n}")
    return _build_masked(g, root, g.full_mask)


def coalition_order(pt: Pseudotree, coalition: AgentSet) -> int:
    """Order of a coalition: the minimum position among its members."""
    if not coalition:
        raise ValueError("the empty coalition has no order")
    return min(pt.position[a] for a in coalition)


def suffix_agents(pt: Pseudotree, k: int) -> AgentSet:
    """Agents whose position is >= k (1-based, 1 <= k <= n)."""
    if not 1 <= k <= len(pt.order):
        raise ValueError(f"position {k} out of range 1..{len(pt.order)}")
    return AgentSet.from_mask(pt.suffix_mask(k))
