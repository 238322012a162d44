"""Agent sets, synergy graphs and coalition structures.

Agents are 0-indexed. Every set of agents is backed by an integer bitmask
(bit i set <=> agent i is a member), which gives constant-time membership
and set arithmetic at any problem size thanks to Python's arbitrary
precision integers.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(members: Iterable[int]) -> int:
    """Bitmask of an iterable of agent indices."""
    m = 0
    for i in members:
        m |= 1 << i
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class AgentSet:
    """Immutable set of agent indices with ascending iteration order."""

    __slots__ = ("mask",)

    def __init__(self, members: Iterable[int] = ()):
        m = 0
        for i in members:
            if i < 0:
                raise ValueError(f"negative agent index: {i}")
            m |= 1 << i
        object.__setattr__(self, "mask", m)

    @classmethod
    def from_mask(cls, mask: int) -> "AgentSet":
        if mask < 0:
            raise ValueError("negative bitmask")
        s = cls.__new__(cls)
        object.__setattr__(s, "mask", mask)
        return s

    def __setattr__(self, name, value):
        raise AttributeError("AgentSet is immutable")

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, i: int) -> bool:
        return i >= 0 and (self.mask >> i) & 1 == 1

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        return isinstance(other, AgentSet) and self.mask == other.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def __or__(self, other: "AgentSet") -> "AgentSet":
        return AgentSet.from_mask(self.mask | other.mask)

    def __and__(self, other: "AgentSet") -> "AgentSet":
        return AgentSet.from_mask(self.mask & other.mask)

    def __sub__(self, other: "AgentSet") -> "AgentSet":
        return AgentSet.from_mask(self.mask & ~other.mask)

    def __le__(self, other: "AgentSet") -> bool:
        return self.mask & ~other.mask == 0

    def __repr__(self) -> str:
        return "{%s}" % ",".join(str(i) for i in self)


class SynergyGraph:
    """Undirected graph over agents 0..n-1 restricting coalition feasibility.

    A coalition is feasible iff the subgraph it induces is connected.
    Construction normalizes and deduplicates edges; self-loops and
    out-of-range endpoints are rejected.
    """

    __slots__ = ("n", "edges", "nbr_masks", "full_mask")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError(f"need at least one agent, got n={n}")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at agent {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        nbr = [0] * n
        for u, v in norm:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        object.__setattr__(self, "nbr_masks", tuple(nbr))
        object.__setattr__(self, "full_mask", (1 << n) - 1)

    def __setattr__(self, name, value):
        raise AttributeError("SynergyGraph is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SynergyGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"SynergyGraph(n={self.n}, m={len(self.edges)})"

    def is_tree(self) -> bool:
        return len(self.edges) == self.n - 1 and self.is_connected()

    def is_connected(self) -> bool:
        return self.feasible_mask(self.full_mask)

    # mask-level queries (hot paths use these directly)

    def component_masks(self, mask: int) -> list[int]:
        """Connected components of the subgraph induced by ``mask``.

        Returned as bitmasks ordered by smallest member.
        """
        nbr = self.nbr_masks
        comps = []
        remaining = mask
        while remaining:
            seed = remaining & -remaining
            comp = seed
            frontier = seed
            while frontier:
                grow = 0
                f = frontier
                while f:
                    b = f & -f
                    f ^= b
                    grow |= nbr[b.bit_length() - 1]
                frontier = grow & remaining & ~comp
                comp |= frontier
            comps.append(comp)
            remaining &= ~comp
        return comps

    def feasible_mask(self, mask: int) -> bool:
        """True iff ``mask`` is nonempty and induces a connected subgraph."""
        if mask == 0:
            return False
        nbr = self.nbr_masks
        comp = mask & -mask
        frontier = comp
        while frontier:
            grow = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                grow |= nbr[b.bit_length() - 1]
            frontier = grow & mask & ~comp
            comp |= frontier
        return comp == mask

    # AgentSet-level queries

    def is_feasible(self, coalition: AgentSet) -> bool:
        """Feasibility of a coalition: nonempty and connected when induced."""
        self._check_subset(coalition.mask)
        return self.feasible_mask(coalition.mask)

    def components(self, agents: AgentSet) -> list[AgentSet]:
        """Partition of ``agents`` into maximal connected subsets."""
        self._check_subset(agents.mask)
        return [AgentSet.from_mask(m) for m in self.component_masks(agents.mask)]

    def neighbors_in(self, i: int, agents: AgentSet) -> AgentSet:
        """All members of ``agents`` adjacent to agent ``i``."""
        if not 0 <= i < self.n:
            raise ValueError(f"agent {i} out of range for n={self.n}")
        return AgentSet.from_mask(self.nbr_masks[i] & agents.mask)

    def degree(self, i: int) -> int:
        return self.nbr_masks[i].bit_count()

    def _check_subset(self, mask: int) -> None:
        if mask & ~self.full_mask:
            raise ValueError("agent set exceeds the graph universe")


class CoalitionStructure:
    """Exhaustive partition of the agent universe into nonempty coalitions.

    Parts are stored sorted by smallest member, so two structures over the
    same partition compare equal regardless of construction order.
    """

    __slots__ = ("parts", "n")

    def __init__(self, parts: Iterable[AgentSet], n: int):
        ordered = sorted((p for p in parts), key=lambda p: p.mask & -p.mask)
        union = 0
        for p in ordered:
            if p.mask == 0:
                raise ValueError("empty coalition in structure")
            if union & p.mask:
                raise ValueError("overlapping coalitions in structure")
            union |= p.mask
        if union != (1 << n) - 1:
            raise ValueError("structure does not cover the agent universe")
        object.__setattr__(self, "parts", tuple(ordered))
        object.__setattr__(self, "n", n)

    @classmethod
    def from_masks(cls, masks: Iterable[int], n: int) -> "CoalitionStructure":
        return cls([AgentSet.from_mask(m) for m in masks], n)

    def __setattr__(self, name, value):
        raise AttributeError("CoalitionStructure is immutable")

    def __iter__(self) -> Iterator[AgentSet]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CoalitionStructure)
            and self.n == other.n
            and self.parts == other.parts
        )

    def __hash__(self) -> int:
        return hash((self.n, self.parts))

    def as_lists(self) -> list[list[int]]:
        return [list(p) for p in self.parts]

    def __repr__(self) -> str:
        return "".join(repr(p) for p in self.parts)
