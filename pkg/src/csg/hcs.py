"""Hierarchical coalition-structure graph export (small instances).

Nodes are the feasible coalition structures; a directed edge runs from CS
to CS' when CS' results from expanding one subspace of a frontier
coalition of CS: the frontier coalition C is replaced by a feasible
subcoalition of equal order plus the connected components of the rest.
A frontier coalition is one with no edge to any coalition of higher order
in its structure.
"""

from __future__ import annotations

from .cse import _connected_masks
from .graphs import CoalitionStructure, SynergyGraph
from .oracle import feasible_partitions
from .pseudotree import Pseudotree

MAX_HCS_AGENTS = 12


def _order_of(pt: Pseudotree, mask: int) -> int:
    pos = pt.position
    k = None
    m = mask
    while m:
        b = m & -m
        m ^= b
        p = pos[b.bit_length() - 1]
        if k is None or p < k:
            k = p
    return k


def _nbr_union(g: SynergyGraph, mask: int) -> int:
    u = 0
    m = mask
    while m:
        b = m & -m
        m ^= b
        u |= g.nbr_masks[b.bit_length() - 1]
    return u


def frontier_masks(g: SynergyGraph, pt: Pseudotree, parts: list[int]) -> list[int]:
    """Coalitions of the structure not adjacent to any higher-order one."""
    orders = {c: _order_of(pt, c) for c in parts}
    out = []
    for c in parts:
        nb = _nbr_union(g, c)
        if not any(
            orders[other] > orders[c] and nb & other
            for other in parts
            if other != c
        ):
            out.append(c)
    return out


def hcs_graph(
    g: SynergyGraph, pt: Pseudotree
) -> tuple[list[CoalitionStructure], list[list[int]], list[tuple[int, int]]]:
    """Nodes, per-node frontier coalitions, and expansion edges.

    Edges are (from node index, to node index) pairs over the node list,
    which enumerates feasible partitions in canonical order.
    """
    if g.n > MAX_HCS_AGENTS:
        raise ValueError(f"HCS export refuses n={g.n} > {MAX_HCS_AGENTS}")
    nodes = list(feasible_partitions(g))
    index = {tuple(sorted(p.mask for p in cs)): i for i, cs in enumerate(nodes)}
    frontiers: list[list[int]] = []
    edges: list[tuple[int, int]] = []
    for i, cs in enumerate(nodes):
        parts = [p.mask for p in cs]
        front = frontier_masks(g, pt, parts)
        frontiers.append(front)
        for c in front:
            pin = min(
                (b.bit_length() - 1 for b in _bits(c)),
                key=lambda a: pt.position[a],
            )
            others = [p for p in parts if p != c]
            for sub, _nb in _connected_masks(g.nbr_masks, c, 1 << pin):
                if sub == c:
                    continue
                new_parts = others + [sub] + g.component_masks(c & ~sub)
                j = index[tuple(sorted(new_parts))]
                edges.append((i, j))
    return nodes, frontiers, edges


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b
        mask ^= b


def _label(cs: CoalitionStructure, frontier: list[int]) -> str:
    fset = set(frontier)
    out = []
    for p in cs:
        text = "{%s}" % ",".join(str(a) for a in p)
        if p.mask in fset:
            text += "*"  # frontier marker (DOT underline is renderer-specific)
        out.append(text)
    return "".join(out)


def hcs_dot(g: SynergyGraph, pt: Pseudotree) -> str:
    """DOT rendering of the HCS graph; frontier coalitions carry a ``*``."""
    nodes, frontiers, edges = hcs_graph(g, pt)
    lines = ["digraph hcs {"]
    for i, cs in enumerate(nodes):
        lines.append(f'  n{i} [label="{_label(cs, frontiers[i])}"];')
    for i, j in edges:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
