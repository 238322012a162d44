"""Agent sets, synergy graphs, coalition structures."""

import random

import pytest

from csg.graphs import AgentSet, CoalitionStructure, SynergyGraph

L3 = SynergyGraph(3, [(0, 1), (1, 2)])
K3 = SynergyGraph(3, [(0, 1), (0, 2), (1, 2)])


def flood_fill_components(n, edges, members):
    """Independent reference: adjacency-set BFS, no bit tricks."""
    adj = {i: set() for i in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    left = set(members)
    comps = []
    while left:
        seed = min(left)
        comp = {seed}
        queue = [seed]
        while queue:
            x = queue.pop()
            for y in adj[x]:
                if y in left and y not in comp:
                    comp.add(y)
                    queue.append(y)
        comps.append(frozenset(comp))
        left -= comp
    return comps


class TestAgentSet:
    def test_ascending_iteration(self):
        s = AgentSet([5, 1, 3])
        assert list(s) == [1, 3, 5]

    def test_membership_and_len(self):
        s = AgentSet([0, 2])
        assert 0 in s and 2 in s and 1 not in s
        assert len(s) == 2

    def test_set_arithmetic(self):
        a, b = AgentSet([0, 1]), AgentSet([1, 2])
        assert list(a | b) == [0, 1, 2]
        assert list(a & b) == [1]
        assert list(a - b) == [0]
        assert AgentSet([1]) <= a

    def test_duplicates_collapse(self):
        assert AgentSet([1, 1, 1]) == AgentSet([1])

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            AgentSet([-1])

    def test_immutable(self):
        s = AgentSet([1])
        with pytest.raises(AttributeError):
            s.mask = 7

    def test_mask_round_trip(self):
        s = AgentSet.from_mask(0b1011)
        assert list(s) == [0, 1, 3]
        assert AgentSet(list(s)).mask == 0b1011


class TestSynergyGraph:
    def test_l3_construction(self):
        assert L3.n == 3 and L3.edges == ((0, 1), (1, 2))

    def test_single_agent(self):
        g = SynergyGraph(1, [])
        assert g.is_connected()
        assert g.is_feasible(AgentSet([0]))

    def test_dedup_and_normalize(self):
        g = SynergyGraph(3, [(1, 0), (0, 1), (1, 2)])
        assert g.edges == ((0, 1), (1, 2))

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            SynergyGraph(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            SynergyGraph(3, [(0, 3)])

    def test_l3_gap_infeasible(self):
        assert not L3.is_feasible(AgentSet([0, 2]))

    def test_singletons_always_feasible(self):
        for g in (L3, K3):
            for i in range(3):
                assert g.is_feasible(AgentSet([i]))

    def test_k3_pair_feasible(self):
        assert K3.is_feasible(AgentSet([0, 2]))

    def test_empty_set_not_feasible(self):
        assert not L3.is_feasible(AgentSet())

    def test_components_l3_gap(self):
        assert L3.components(AgentSet([0, 2])) == [AgentSet([0]), AgentSet([2])]

    def test_components_empty(self):
        assert L3.components(AgentSet()) == []

    def test_neighbors_in(self):
        assert L3.neighbors_in(1, AgentSet([0, 2])) == AgentSet([0, 2])
        assert L3.neighbors_in(0, AgentSet([2])) == AgentSet()
        assert K3.neighbors_in(0, AgentSet([1, 2])) == AgentSet([1, 2])

    def test_neighbors_out_of_range(self):
        with pytest.raises(ValueError):
            L3.neighbors_in(3, AgentSet([0]))

    def test_components_match_flood_fill_reference(self):
        rnd = random.Random(42)
        n = 8
        for trial in range(200):
            edges = set()
            for _ in range(rnd.randint(0, 14)):
                u, v = rnd.sample(range(n), 2)
                edges.add((min(u, v), max(u, v)))
            g = SynergyGraph(n, edges)
            members = [i for i in range(n) if rnd.random() < 0.6]
            got = [frozenset(c) for c in g.components(AgentSet(members))]
            assert got == flood_fill_components(n, edges, members)

    def test_component_invariants(self):
        rnd = random.Random(7)
        for trial in range(100):
            n = rnd.randint(1, 9)
            edges = set()
            for _ in range(rnd.randint(0, n * 2)):
                u, v = rnd.sample(range(n), 2) if n > 1 else (0, 0)
                if u != v:
                    edges.add((min(u, v), max(u, v)))
            g = SynergyGraph(n, edges)
            members = AgentSet([i for i in range(n) if rnd.random() < 0.7])
            comps = g.components(members)
            union = AgentSet()
            for c in comps:
                assert c, "empty component"
                assert not (union & c), "components overlap"
                union = union | c
                assert g.is_feasible(c)
            assert union == members
            for i in range(len(comps)):
                for j in range(i + 1, len(comps)):
                    assert not g.is_feasible(comps[i] | comps[j])
            if members:
                assert g.is_feasible(members) == (len(comps) == 1)

    def test_complete_graph_all_subsets_feasible(self):
        n = 6
        g = SynergyGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
        count = sum(
            g.feasible_mask(m) for m in range(1, 1 << n)
        )
        assert count == 2**n - 1


class TestCoalitionStructure:
    def test_parts_sorted_by_smallest_member(self):
        cs = CoalitionStructure([AgentSet([2]), AgentSet([0, 1])], 3)
        assert cs.as_lists() == [[0, 1], [2]]

    def test_must_cover_universe(self):
        with pytest.raises(ValueError):
            CoalitionStructure([AgentSet([0])], 2)

    def test_no_overlap(self):
        with pytest.raises(ValueError):
            CoalitionStructure([AgentSet([0, 1]), AgentSet([1])], 2)

    def test_no_empty_part(self):
        with pytest.raises(ValueError):
            CoalitionStructure([AgentSet([0, 1]), AgentSet()], 2)

    def test_equality_ignores_input_order(self):
        a = CoalitionStructure([AgentSet([1]), AgentSet([0])], 2)
        b = CoalitionStructure([AgentSet([0]), AgentSet([1])], 2)
        assert a == b and hash(a) == hash(b)
