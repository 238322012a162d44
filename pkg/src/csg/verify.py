"""Cross-algorithm agreement and counter-identity checks.

Runs every solver on a battery of small seeded instances and verifies:

* identical optimal values (1e-9 absolute slack: the solvers accumulate
  their sums in different orders),
* each reported structure is feasible, partitions the agents, and re-sums
  to the reported value,
* the hierarchical solver's table size equals the two-partition count plus
  one, and on trees equals n, with subspaces equal to the feasible-set
  count.

Used both by the test suite and the ``csg verify`` command.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Callable, Iterator

from .baselines import solve_dp, solve_dyce, solve_idp
from .cse import count_connected_sets
from .dype import solve_dype
from .generators import generate, spec_parse
from .graphs import SynergyGraph
from .oracle import count_two_partitions, solve_bruteforce
from .results import SolveResult
from .values import SeededRandom, ValueModel, cs_value

VALUE_TOL = 1e-9

SOLVERS: dict[str, Callable[[SynergyGraph, ValueModel], SolveResult]] = {
    "dype": solve_dype,
    "dp": solve_dp,
    "idp": solve_idp,
    "dyce": solve_dyce,
    "bruteforce": solve_bruteforce,
}

INSTANCE_MODELS = ("complete", "tree", "ba:1", "ba:2", "path")


@dataclass
class InstanceReport:
    label: str
    ok: bool
    detail: str


def verification_instances(
    n_max: int, instances: int, seed: int
) -> Iterator[tuple[str, SynergyGraph, ValueModel]]:
    """Deterministic battery cycling graph classes and sizes 2..n_max."""
    count = 0
    round_no = 0
    while count < instances:
        for model in INSTANCE_MODELS:
            k = int(model.split(":")[1]) if model.startswith("ba:") else 0
            for n in range(max(2, k + 1), n_max + 1):
                if count >= instances:
                    return
                inst_seed = seed + round_no * 10007 + count
                g = generate(spec_parse(model, n, inst_seed))
                label = f"{model} n={n} seed={inst_seed}"
                yield label, g, SeededRandom(inst_seed)
                count += 1
        round_no += 1


def check_instance(
    label: str, g: SynergyGraph, model: ValueModel
) -> InstanceReport:
    results = {name: fn(g, model) for name, fn in SOLVERS.items()}
    problems = []
    for name, r in results.items():
        try:
            resum = cs_value(model, r.optimal_cs, g)
        except ValueError as exc:
            problems.append(f"{name}: {exc}")
            continue
        if resum != r.optimal_value:
            problems.append(f"{name}: value {r.optimal_value!r} != re-sum {resum!r}")
    vals = {name: r.optimal_value for name, r in results.items()}
    spread = max(vals.values()) - min(vals.values())
    if spread > VALUE_TOL:
        problems.append(f"value spread {spread:g} across {vals}")
    dype_r = results["dype"]
    expected_sub = count_two_partitions(g) + 1
    if dype_r.subproblems_stored != expected_sub:
        problems.append(
            f"dype subproblems {dype_r.subproblems_stored} != "
            f"two-partitions+1 {expected_sub}"
        )
    if results["dyce"].subproblems_stored != count_connected_sets(g):
        problems.append("dyce subproblems != feasible-set count")
    if g.is_tree():
        if dype_r.subproblems_stored != g.n:
            problems.append(f"tree: dype subproblems {dype_r.subproblems_stored} != n")
        if dype_r.subspaces_evaluated != count_connected_sets(g):
            problems.append("tree: dype subspaces != feasible-set count")
    if problems:
        return InstanceReport(label, False, "; ".join(problems))
    return InstanceReport(
        label, True, f"value={vals['dype']:.6f} sub={dype_r.subproblems_stored}"
    )


def run_verification(
    n_max: int = 10,
    instances: int = 200,
    seed: int = 0,
    out=None,
) -> bool:
    """Run the battery; prints one line per instance, returns overall pass."""
    out = out or sys.stdout
    if n_max > 10:
        raise ValueError("verification instances are capped at n_max <= 10")
    all_ok = True
    checked = 0
    for label, g, model in verification_instances(n_max, instances, seed):
        rep = check_instance(label, g, model)
        checked += 1
        status = "ok" if rep.ok else "MISMATCH"
        print(f"{status:8s} {rep.label}: {rep.detail}", file=out)
        all_ok = all_ok and rep.ok
    if checked == 0:
        print("no instances requested", file=out)
    print(
        f"{'all checks passed' if all_ok else 'MISMATCHES FOUND'} "
        f"({checked} instances)",
        file=out,
    )
    return all_ok
