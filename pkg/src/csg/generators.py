"""Seeded benchmark graph generators.

Randomness comes from SplitMix64 (Steele et al.'s published mixing
constants), not the platform RNG, so an instance is pinned by
(model, n, seed) across runs, machines, and language runtimes.

Models:
* ``tree``       - uniform random labeled tree (Prufer decoding)
* ``btree:<d>``  - random attachment tree with all degrees <= d
* ``ba:<k>``     - Barabasi-Albert preferential attachment, k-clique seed,
                   k distinct degree-proportional targets per new node
* ``complete`` / ``path`` - deterministic, seed ignored
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graphs import SynergyGraph

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Tiny fixed-constant PRNG; enough for instance generation."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randrange(self, m: int) -> int:
        """Uniform integer in [0, m), rejection sampled for exactness."""
        if m <= 0:
            raise ValueError("randrange needs a positive bound")
        bound = _MASK64 + 1 - ((_MASK64 + 1) % m)
        while True:
            u = self.next_u64()
            if u < bound:
                return u % m


@dataclass(frozen=True)
class GraphSpec:
    model: str  # tree | btree | ba | complete | path
    n: int
    seed: int = 0
    param: int = 0  # d for btree, k for ba

    def label(self) -> str:
        if self.model in ("btree", "ba"):
            return f"{self.model}:{self.param}"
        return self.model


def spec_parse(text: str, n: int, seed: int = 0) -> GraphSpec:
    """Parse a model string (``tree | btree:<d> | ba:<k> | complete | path``)
    into a spec for ``n`` agents."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    parts = text.strip().split(":")
    model = parts[0]
    if model in ("tree", "complete", "path"):
        if len(parts) != 1:
            raise ValueError(f"model {model!r} takes no parameter: {text!r}")
        return GraphSpec(model, n, seed)
    if model == "btree":
        if len(parts) != 2 or not parts[1].isdigit():
            raise ValueError(f"expected btree:<d>, got {text!r}")
        d = int(parts[1])
        if d < 2:
            raise ValueError(f"degree bound must be >= 2, got {d}")
        return GraphSpec(model, n, seed, param=d)
    if model == "ba":
        if len(parts) != 2 or not parts[1].isdigit():
            raise ValueError(f"expected ba:<k>, got {text!r}")
        k = int(parts[1])
        if not 1 <= k < max(n, 2):
            raise ValueError(f"ba needs 1 <= k < n, got k={k}, n={n}")
        return GraphSpec(model, n, seed, param=k)
    raise ValueError(f"unknown graph model {model!r} in {text!r}")


def _random_tree(n: int, rng: SplitMix64) -> list[tuple[int, int]]:
    # uniform labeled tree via Prufer sequence decoding
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    prufer = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for a in prufer:
        degree[a] += 1
    edges = []
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    for a in prufer:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, a), max(leaf, a)))
        degree[a] -= 1
        if degree[a] == 1:
            heapq.heappush(leaves, a)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return edges


def _bounded_tree(n: int, d: int, rng: SplitMix64) -> list[tuple[int, int]]:
    # node i attaches to a uniform choice among earlier nodes below capacity
    if d < 2:
        raise ValueError(f"degree bound must be >= 2, got {d}")
    degree = [0] * n
    edges = []
    for i in range(1, n):
        eligible = [j for j in range(i) if degree[j] < d]
        if not eligible:
            raise ValueError(f"no attachment slots left for node {i} with d={d}")
        target = eligible[rng.randrange(len(eligible))]
        edges.append((target, i))
        degree[target] += 1
        degree[i] += 1
    return edges


def _barabasi_albert(n: int, k: int, rng: SplitMix64) -> list[tuple[int, int]]:
    if not 1 <= k < n:
        raise ValueError(f"ba needs 1 <= k < n, got k={k}, n={n}")
    edges = []
    repeated: list[int] = []  # node list weighted by degree
    for u in range(k):
        for v in range(u + 1, k):
            edges.append((u, v))
            repeated.append(u)
            repeated.append(v)
    for i in range(k, n):
        targets: set[int] = set()
        while len(targets) < k:
            if repeated:
                t = repeated[rng.randrange(len(repeated))]
            else:
                t = rng.randrange(i)  # all degrees zero (k = 1 seed node)
            targets.add(t)
        for t in sorted(targets):
            edges.append((t, i))
            repeated.append(t)
            repeated.append(i)
    return edges


def generate(spec: GraphSpec) -> SynergyGraph:
    """Deterministic graph for a spec; same (model, n, seed) - same edges."""
    n = spec.n
    rng = SplitMix64(spec.seed)
    if spec.model == "complete":
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    elif spec.model == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif spec.model == "tree":
        edges = _random_tree(n, rng)
    elif spec.model == "btree":
        edges = _bounded_tree(n, spec.param, rng)
    elif spec.model == "ba":
        edges = _barabasi_albert(n, spec.param, rng)
    else:
        raise ValueError(f"unknown graph model {spec.model!r}")
    return SynergyGraph(n, edges)
