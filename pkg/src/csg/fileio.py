"""Instance files and result documents.

Graph files are plain text: the agent count on the first line, then one
``<u> <v>`` line per edge (0-indexed, u < v, ascending).  Result documents
are JSON with a fixed field order so golden files diff cleanly.
"""

from __future__ import annotations

import json
from typing import Optional

from .graphs import SynergyGraph
from .results import SolveResult


def write_graph(g: SynergyGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(f"{g.n}\n")
        for u, v in g.edges:
            f.write(f"{u} {v}\n")


def read_graph(path) -> SynergyGraph:
    with open(path, "r", encoding="utf-8") as f:
        lines = [ln.strip() for ln in f if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise ValueError(f"{path}: empty graph file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"{path}: first line must be the agent count") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"{path}: bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return SynergyGraph(n, edges)


def result_document(
    result: SolveResult,
    graph_ref: str,
    values_spec: str,
    root: Optional[int] = None,
    ordering: Optional[list[int]] = None,
) -> dict:
    """Serializable record of one solve, fixed field order."""
    return {
        "algorithm": result.algorithm,
        "instance": {
            "graph": graph_ref,
            "n": result.instance.get("n"),
            "edges": result.instance.get("edges"),
            "values": values_spec,
            "root": root,
            "ordering": ordering,
        },
        "optimal_value": result.optimal_value,
        "optimal_cs": result.optimal_cs.as_lists(),
        "counters": {
            "subproblems": result.subproblems_stored,
            "subspaces": result.subspaces_evaluated,
        },
        "elapsed_ms": result.elapsed * 1000.0,
    }


def save_result(doc: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(doc, f, indent=2)
        f.write("\n")


def load_result(path) -> dict:
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)
