"""Optimal coalition structure generation over synergy graphs.

A toolkit for graph-restricted cooperative games: the pseudotree
hierarchical solver, classic DP / IDP / DyCE baselines, a brute-force
oracle, seeded graph generators, and a benchmark harness.
"""

from .baselines import solve_dp, solve_dyce, solve_idp
from .cse import connected_sets_containing, count_connected_sets
from .dype import (
    DpTables,
    best_cs,
    enumerate_subproblems,
    solve_dype,
    solve_dype_multi,
)
from .generators import GraphSpec, generate, spec_parse
from .graphs import AgentSet, CoalitionStructure, SynergyGraph
from .oracle import (
    count_two_partitions,
    feasible_partitions,
    solve_bruteforce,
)
from .pseudotree import (
    Pseudotree,
    build_pseudotree,
    coalition_order,
    default_root,
    suffix_agents,
)
from .results import SolveResult
from .values import EdgeSum, ExplicitTable, SeededRandom, ValueModel, cs_value

__version__ = "0.1.0"

__all__ = [
    "AgentSet",
    "CoalitionStructure",
    "DpTables",
    "EdgeSum",
    "ExplicitTable",
    "GraphSpec",
    "Pseudotree",
    "SeededRandom",
    "SolveResult",
    "SynergyGraph",
    "ValueModel",
    "best_cs",
    "build_pseudotree",
    "coalition_order",
    "connected_sets_containing",
    "count_connected_sets",
    "count_two_partitions",
    "cs_value",
    "default_root",
    "enumerate_subproblems",
    "feasible_partitions",
    "generate",
    "solve_bruteforce",
    "solve_dp",
    "solve_dyce",
    "solve_dype",
    "solve_dype_multi",
    "solve_idp",
    "spec_parse",
    "suffix_agents",
]
