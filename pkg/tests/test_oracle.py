"""Brute-force oracle: partition enumeration and structural counts."""

import pytest

from csg.generators import generate, spec_parse
from csg.graphs import SynergyGraph
from csg.oracle import (
    count_feasible_partitions,
    count_two_partitions,
    feasible_partitions,
    solve_bruteforce,
)
from csg.values import ExplicitTable

L3 = SynergyGraph(3, [(0, 1), (1, 2)])
K3 = SynergyGraph(3, [(0, 1), (0, 2), (1, 2)])

# B(1)..B(10)
BELL = [1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]


def test_k3_partition_count():
    assert count_feasible_partitions(K3) == 5


def test_l3_partitions_listed():
    got = [cs.as_lists() for cs in feasible_partitions(L3)]
    assert got == [
        [[0, 1, 2]],
        [[0, 1], [2]],
        [[0], [1, 2]],
        [[0], [1], [2]],
    ]


def test_single_agent():
    g = SynergyGraph(1, [])
    assert count_feasible_partitions(g) == 1


def test_every_partition_is_valid():
    for g in (L3, K3, generate(spec_parse("tree", 7, 1))):
        for cs in feasible_partitions(g):
            assert cs.n == g.n
            for p in cs:
                assert g.is_feasible(p)


@pytest.mark.parametrize("n", range(1, 11))
def test_bell_numbers_on_complete_graphs(n):
    g = generate(spec_parse("complete", n, 0))
    assert count_feasible_partitions(g) == BELL[n - 1]


def test_pruned_path_matches_closed_forms():
    # n > 10 turns on prefix pruning; closed forms check it loses nothing:
    # a path has one feasible partition per segmentation (2^(n-1)), a star
    # has one per subset of leaves kept with the center (2^(n-1))
    n = 12
    path = generate(spec_parse("path", n, 0))
    seen = set()
    for cs in feasible_partitions(path):
        key = tuple(sorted(p.mask for p in cs))
        assert key not in seen, "duplicate partition"
        seen.add(key)
        for p in cs:
            assert path.is_feasible(p)
    assert len(seen) == 2 ** (n - 1)

    star = SynergyGraph(n, [(0, i) for i in range(1, n)])
    assert count_feasible_partitions(star) == 2 ** (n - 1)


def test_enum_size_limit():
    g = generate(spec_parse("path", 15, 0))
    with pytest.raises(ValueError):
        list(feasible_partitions(g))


def test_bruteforce_singleton_favouring_l3():
    vals = ExplicitTable(
        {(0,): 2, (1,): 2, (2,): 2, (0, 1): 1, (1, 2): 1, (0, 1, 2): 1}
    )
    r = solve_bruteforce(L3, vals)
    assert r.optimal_value == 6.0
    assert r.optimal_cs.as_lists() == [[0], [1], [2]]
    assert r.subspaces_evaluated == 4


def test_bruteforce_grand_favouring_k3():
    vals = ExplicitTable(
        {(0,): 1, (1,): 1, (2,): 1,
         (0, 1): 4, (0, 2): 4, (1, 2): 4, (0, 1, 2): 9}
    )
    r = solve_bruteforce(K3, vals)
    assert r.optimal_value == 9.0
    assert r.optimal_cs.as_lists() == [[0, 1, 2]]


def test_bruteforce_all_zero_ties_resolve_canonically():
    vals = ExplicitTable(
        {(0,): 0, (1,): 0, (2,): 0, (0, 1): 0, (1, 2): 0, (0, 1, 2): 0}
    )
    r = solve_bruteforce(L3, vals)
    assert r.optimal_value == 0.0
    # first feasible partition in canonical order is the grand coalition
    assert r.optimal_cs.as_lists() == [[0, 1, 2]]


def test_two_partitions_trees():
    for n in (2, 5, 9, 16):
        g = generate(spec_parse("tree", n, 3))
        assert count_two_partitions(g) == n - 1


def test_two_partitions_complete():
    for n in (2, 4, 8, 10):
        g = generate(spec_parse("complete", n, 0))
        assert count_two_partitions(g) == 2 ** (n - 1) - 1


def test_two_partitions_l3():
    assert count_two_partitions(L3) == 2


def test_two_partitions_single_agent():
    assert count_two_partitions(SynergyGraph(1, [])) == 0
