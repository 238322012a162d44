"""Classic DP, IDP, and DyCE baselines."""

import pytest

from csg.baselines import DENSE_LIMIT, solve_dp, solve_dyce, solve_idp
from csg.cse import count_connected_sets
from csg.dype import solve_dype
from csg.generators import generate, spec_parse
from csg.graphs import SynergyGraph
from csg.oracle import solve_bruteforce
from csg.values import ExplicitTable, SeededRandom

L3 = SynergyGraph(3, [(0, 1), (1, 2)])
K3 = SynergyGraph(3, [(0, 1), (0, 2), (1, 2)])

K3_VALUES = ExplicitTable(
    {(0,): 1, (1,): 2, (2,): 3,
     (0, 1): 4, (0, 2): 5, (1, 2): 6, (0, 1, 2): 7}
)
L3_VALUES = ExplicitTable(
    {(0,): 2, (1,): 2, (2,): 2, (0, 1): 1, (1, 2): 1, (0, 1, 2): 1}
)


class TestClassicDp:
    def test_k3_golden_counters(self):
        r = solve_dp(K3, K3_VALUES)
        assert r.subproblems_stored == 7
        assert r.subspaces_evaluated == 13
        assert r.optimal_value == 7.0

    def test_single_agent(self):
        r = solve_dp(SynergyGraph(1, []), ExplicitTable({(0,): 4.0}))
        assert r.subproblems_stored == 1
        assert r.subspaces_evaluated == 1
        assert r.optimal_value == 4.0

    def test_dense_limit_refusal(self):
        g = generate(spec_parse("path", DENSE_LIMIT + 1, 0))
        with pytest.raises(ValueError):
            solve_dp(g, SeededRandom(0))

    @pytest.mark.parametrize("seed", range(6))
    def test_matches_oracle(self, seed):
        n = 4 + seed
        g = generate(spec_parse(["tree", "ba:2", "complete"][seed % 3], n, seed))
        m = SeededRandom(seed)
        assert abs(solve_dp(g, m).optimal_value
                   - solve_bruteforce(g, m).optimal_value) <= 1e-9

    def test_disconnected_graph(self):
        g = SynergyGraph(4, [(0, 1), (2, 3)])
        m = SeededRandom(5)
        assert abs(solve_dp(g, m).optimal_value
                   - solve_bruteforce(g, m).optimal_value) <= 1e-9


class TestIdp:
    @pytest.mark.parametrize("seed", range(8))
    def test_same_optimum_as_dp(self, seed):
        n = 3 + seed
        g = generate(spec_parse(["tree", "ba:1", "complete", "path"][seed % 4],
                                n, seed))
        m = SeededRandom(seed + 50)
        dp = solve_dp(g, m)
        idp = solve_idp(g, m)
        assert dp.optimal_value == idp.optimal_value
        assert idp.subspaces_evaluated <= dp.subspaces_evaluated

    def test_k3_counters_match_dp(self):
        # no split is prunable at n=3
        r = solve_idp(K3, K3_VALUES)
        assert (r.subproblems_stored, r.subspaces_evaluated) == (7, 13)

    def test_pruning_bites_at_larger_n(self):
        g = generate(spec_parse("complete", 10, 0))
        m = SeededRandom(1)
        assert (solve_idp(g, m).subspaces_evaluated
                < solve_dp(g, m).subspaces_evaluated)


class TestDyce:
    def test_l3_skips_the_infeasible_pair(self):
        r = solve_dyce(L3, L3_VALUES)
        assert r.subproblems_stored == 6  # {0,2} never materialized
        assert r.subspaces_evaluated == 10  # split ({1},{0,2}) never evaluated
        assert r.optimal_value == 6.0

    def test_k3_classic_equals_dp(self):
        r = solve_dyce(K3, K3_VALUES)
        assert (r.subproblems_stored, r.subspaces_evaluated) == (7, 13)

    @pytest.mark.parametrize("model,n,seed", [
        ("tree", 8, 0), ("tree", 13, 1), ("path", 11, 2), ("btree:3", 12, 3),
    ])
    def test_tree_table_equals_feasible_count(self, model, n, seed):
        g = generate(spec_parse(model, n, seed))
        r = solve_dyce(g, SeededRandom(seed))
        assert r.subproblems_stored == count_connected_sets(g)

    @pytest.mark.parametrize("seed", range(6))
    def test_matches_oracle(self, seed):
        n = 4 + seed
        g = generate(spec_parse(["tree", "ba:2", "path"][seed % 3], n, seed))
        m = SeededRandom(seed + 7)
        assert abs(solve_dyce(g, m).optimal_value
                   - solve_bruteforce(g, m).optimal_value) <= 1e-9

    def test_disconnected_graph(self):
        g = SynergyGraph(5, [(0, 1), (2, 3), (3, 4)])
        m = SeededRandom(3)
        assert abs(solve_dyce(g, m).optimal_value
                   - solve_bruteforce(g, m).optimal_value) <= 1e-9


class TestFourWayAgreement:
    @pytest.mark.parametrize("seed", range(10))
    def test_all_solvers_agree(self, seed):
        models = ["complete", "tree", "ba:1", "ba:2", "path"]
        model = models[seed % len(models)]
        n = max(3, 2 + (seed * 2) % 9)
        g = generate(spec_parse(model, n, seed))
        m = SeededRandom(seed)
        values = [
            solve_dype(g, m).optimal_value,
            solve_dp(g, m).optimal_value,
            solve_idp(g, m).optimal_value,
            solve_dyce(g, m).optimal_value,
            solve_bruteforce(g, m).optimal_value,
        ]
        assert max(values) - min(values) <= 1e-9


def test_counter_ordering_on_sparse_trees():
    # expected counter ordering: hierarchical < graph-restricted < classic
    for seed in range(3):
        g = generate(spec_parse("tree", 12, seed))
        m = SeededRandom(seed)
        dype_r = solve_dype(g, m)
        dyce_r = solve_dyce(g, m)
        idp_r = solve_idp(g, m)
        assert (dype_r.subspaces_evaluated
                < dyce_r.subspaces_evaluated
                < idp_r.subspaces_evaluated)
        assert (dype_r.subproblems_stored
                < dyce_r.subproblems_stored
                < idp_r.subproblems_stored)
