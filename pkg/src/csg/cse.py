"""Connected subgraph enumeration (CSE).

Enumerates every connected subset of a ground set that contains a pinned
agent, each exactly once, with memory polynomial in the ground-set size.
The scheme keeps a growing set S and a forbidden set X: at each node the
lowest-index eligible extension vertex v (a neighbor of S inside the
ground set, not in S or X) is either added to S, spawning a new subset,
or permanently forbidden before trying the next extension.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .graphs import AgentSet, SynergyGraph


def _connected_masks(
    nbr_masks, ground: int, pin_bit: int
) -> Iterator[tuple[int, int]]:
    """Yield (set mask, neighbor-union mask) for every connected subset of
    ``ground`` containing ``pin_bit``, each once.  Iterative, explicit stack."""
    nb0 = nbr_masks[pin_bit.bit_length() - 1]
    yield pin_bit, nb0
    # frame: [S, X, union of neighbor masks of S]
    stack = [[pin_bit, 0, nb0]]
    while stack:
        top = stack[-1]
        s, x, nb = top
        ext = nb & ground & ~(s | x)
        if not ext:
            stack.pop()
            continue
        v = ext & -ext
        top[1] = x | v  # forbid v for later picks at this node
        sc = s | v
        nbc = nb | nbr_masks[v.bit_length() - 1]
        yield sc, nbc
        stack.append([sc, x | v, nbc])


def connected_sets_containing(
    g: SynergyGraph, ground: AgentSet, pin: int
) -> Iterator[AgentSet]:
    """Iterate the feasible subsets of ``ground`` that contain ``pin``.

    Deterministic order given (g, ground, pin); no subset appears twice.
    """
    if pin not in ground:
        raise ValueError(f"pinned agent {pin} not in the ground set")
    g._check_subset(ground.mask)

    def emit():
        for mask, _ in _connected_masks(g.nbr_masks, ground.mask, 1 << pin):
            yield AgentSet.from_mask(mask)

    return emit()


def _count_all_connected(nbr_masks, ground: int) -> int:
    """Number of connected subsets of ``ground``: sum over each member v of
    the connected subsets of ground-minus-lower-agents pinned at v."""
    total = 0
    rest = ground
    while rest:
        pin_bit = rest & -rest
        for _ in _connected_masks(nbr_masks, rest, pin_bit):
            total += 1
        rest ^= pin_bit
    return total


def count_connected_sets(
    g: SynergyGraph, ground: Optional[AgentSet] = None, pin: Optional[int] = None
) -> int:
    """Count the feasible subsets of ``ground`` (all agents by default),
    restricted to those containing ``pin`` when one is given.

    Counts by running the enumerator, so it never materializes the family.
    """
    gm = g.full_mask if ground is None else ground.mask
    if gm == 0:
        raise ValueError("empty ground set")
    g._check_subset(gm)
    if pin is not None:
        if not (gm >> pin) & 1:
            raise ValueError(f"pinned agent {pin} not in the ground set")
        return sum(1 for _ in _connected_masks(g.nbr_masks, gm, 1 << pin))
    return _count_all_connected(g.nbr_masks, gm)
