"""Common result record shared by all solvers."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import CoalitionStructure


@dataclass
class SolveResult:
    """Outcome of one solver run on one instance.

    ``subproblems_stored`` counts distinct table entries created and
    ``subspaces_evaluated`` counts candidate evaluations inside them; the
    brute-force oracle stores no table, so it reports zero subproblems and
    one subspace per feasible partition compared.
    """

    algorithm: str
    optimal_value: float
    optimal_cs: CoalitionStructure
    subproblems_stored: int
    subspaces_evaluated: int
    elapsed: float
    instance: dict = field(default_factory=dict)
