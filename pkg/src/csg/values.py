"""Characteristic-function models.

Three interchangeable variants, all deterministic so different solvers can
be compared value-for-value:

* ``ExplicitTable`` - a literal map from coalition to value.
* ``EdgeSum``       - sum of the weights of the edges inside the coalition.
* ``SeededRandom``  - pseudo-random but reproducible: a coalition's value
  is a 64-bit mix of its bitmask words and the seed, mapped uniformly onto
  [0, scale * |C|).  Identical across runs and platforms.

Models are total on feasible coalitions; solvers never query infeasible
ones, so no minus-infinity value is ever materialized.
"""

from __future__ import annotations

from typing import Optional

from .graphs import AgentSet, CoalitionStructure, SynergyGraph, mask_of

_M64 = (1 << 64) - 1


def _mix64(z: int) -> int:
    """SplitMix64 finalizer (fixed published constants)."""
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


def coalition_hash(mask: int, seed: int) -> int:
    """64-bit digest of a coalition: absorb the little-endian 64-bit words
    of the bitmask, then the seed word, through the SplitMix64 finalizer."""
    h = 0
    while True:
        h = _mix64(h ^ (mask & _M64))
        mask >>= 64
        if not mask:
            break
    return _mix64(h ^ (seed & _M64))


class ValueModel:
    """Base interface: ``value_of_mask`` is the hot path, ``value`` the
    AgentSet-level wrapper."""

    spec = "abstract"

    def value_of_mask(self, mask: int) -> float:
        raise NotImplementedError

    def value(self, coalition: AgentSet) -> float:
        if not coalition:
            raise ValueError("the empty coalition has no value")
        return self.value_of_mask(coalition.mask)


class ExplicitTable(ValueModel):
    """Values given literally; a lookup miss signals a malformed instance."""

    def __init__(self, table: dict):
        self._table = {}
        for key, val in table.items():
            mask = key.mask if isinstance(key, AgentSet) else mask_of(key)
            self._table[mask] = float(val)
        self.spec = "table"

    def value_of_mask(self, mask: int) -> float:
        try:
            return self._table[mask]
        except KeyError:
            members = list(AgentSet.from_mask(mask))
            raise ValueError(f"coalition {members} missing from value table") from None

    def __len__(self) -> int:
        return len(self._table)


class EdgeSum(ValueModel):
    """Sum of weights of the graph edges joining members of the coalition."""

    def __init__(self, weights: dict):
        pairs = []
        for (u, v), w in weights.items():
            if u == v:
                raise ValueError(f"self-loop weight at agent {u}")
            pairs.append(((1 << u) | (1 << v), float(w)))
        self._pairs = tuple(pairs)
        self.spec = "edgesum"

    def value_of_mask(self, mask: int) -> float:
        total = 0.0
        for pm, w in self._pairs:
            if pm & mask == pm:
                total += w
        return total


class SeededRandom(ValueModel):
    """Reproducible pseudo-random values, uniform on [0, scale * |C|).

    The draw for coalition C depends only on (seed, C's bitmask words), via
    :func:`coalition_hash`, so it is identical across platforms, processes,
    and enclosing instances.
    """

    def __init__(self, seed: int, scale: float = 1.0):
        self.seed = int(seed)
        self.scale = float(scale)
        self.spec = f"seed:{self.seed}"

    def value_of_mask(self, mask: int) -> float:
        u = coalition_hash(mask, self.seed) / 2.0**64
        return u * self.scale * mask.bit_count()


def cs_value(
    model: ValueModel,
    cs: CoalitionStructure,
    g: Optional[SynergyGraph] = None,
) -> float:
    """Total value of a coalition structure, summed in canonical part order.

    When the graph is supplied, every part is checked for feasibility and an
    infeasible part raises (a structure with one is a solver bug).
    """
    total = 0.0
    for part in cs:
        if g is not None and not g.feasible_mask(part.mask):
            raise ValueError(f"infeasible coalition {part!r} in structure")
        total += model.value_of_mask(part.mask)
    return total


# --- value-table file format: one "<members csv>;<value>" line per
# --- coalition, '#' starts a comment line

def save_table(model: ExplicitTable, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write("# coalition value table: <comma-separated members>;<value>\n")
        for mask in sorted(model._table):
            members = ",".join(str(i) for i in AgentSet.from_mask(mask))
            f.write(f"{members};{model._table[mask]!r}\n")


def load_table(path) -> ExplicitTable:
    table = {}
    with open(path, "r", encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                members_part, value_part = line.split(";")
                members = [int(t) for t in members_part.split(",") if t.strip() != ""]
                table[tuple(members)] = float(value_part)
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: bad table line {line!r}") from exc
    return ExplicitTable(table)


# --- edge-weight file for EdgeSum models: "<u> <v> <w>" per line

def save_edge_weights(weights: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write("# edge weights: <u> <v> <weight>\n")
        norm = {(min(u, v), max(u, v)): w for (u, v), w in weights.items()}
        for (u, v), w in sorted(norm.items()):
            f.write(f"{u} {v} {w!r}\n")


def parse_value_spec(text: str) -> ValueModel:
    """Build a model from a CLI value spec:
    ``seed:<s>`` | ``edgesum:<path>`` | ``table:<path>``."""
    kind, _, arg = text.partition(":")
    if kind == "seed" and arg:
        return SeededRandom(int(arg))
    if kind == "edgesum" and arg:
        return load_edge_weights(arg)
    if kind == "table" and arg:
        return load_table(arg)
    raise ValueError(f"bad value spec {text!r}; use seed:<s>|edgesum:<path>|table:<path>")


def load_edge_weights(path) -> EdgeSum:
    weights = {}
    with open(path, "r", encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3:
                raise ValueError(f"{path}:{lineno}: bad weight line {line!r}")
            u, v, w = int(parts[0]), int(parts[1]), float(parts[2])
            weights[(u, v)] = w
    return EdgeSum(weights)
