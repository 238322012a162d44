"""Graph generators and the instance PRNG."""

import pytest

from csg.generators import GraphSpec, SplitMix64, generate, spec_parse


def test_splitmix64_reference_vector():
    # first outputs of the published splitmix64 for seed 0
    r = SplitMix64(0)
    assert [r.next_u64() for _ in range(4)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
        0xF88BB8A8724C81EC,
    ]


def test_randrange_bounds():
    r = SplitMix64(123)
    draws = [r.randrange(7) for _ in range(500)]
    assert set(draws) <= set(range(7))
    assert len(set(draws)) == 7
    with pytest.raises(ValueError):
        r.randrange(0)


class TestSpecParse:
    def test_plain_models(self):
        assert spec_parse("tree", 5, 1) == GraphSpec("tree", 5, 1)
        assert spec_parse("complete", 4).model == "complete"
        assert spec_parse("path", 4).model == "path"

    def test_parameterized(self):
        assert spec_parse("ba:2", 6).param == 2
        assert spec_parse("btree:3", 6).param == 3
        assert spec_parse("ba:2", 6).label() == "ba:2"

    def test_malformed(self):
        for bad in ("xyz", "ba", "ba:", "ba:x", "btree", "btree:1",
                    "tree:3", "ba:0"):
            with pytest.raises(ValueError):
                spec_parse(bad, 6)

    def test_ba_k_must_be_below_n(self):
        with pytest.raises(ValueError):
            spec_parse("ba:5", 5)

    def test_n_must_be_positive(self):
        with pytest.raises(ValueError):
            spec_parse("tree", 0)


class TestDeterministicModels:
    def test_complete(self):
        g = generate(spec_parse("complete", 3, 99))
        assert g.edges == ((0, 1), (0, 2), (1, 2))

    def test_path(self):
        g = generate(spec_parse("path", 4, 99))
        assert g.edges == ((0, 1), (1, 2), (2, 3))

    def test_single_agent(self):
        for model in ("tree", "complete", "path"):
            g = generate(spec_parse(model, 1, 0))
            assert g.n == 1 and g.edges == ()


class TestRandomTree:
    @pytest.mark.parametrize("seed", range(25))
    def test_is_a_tree(self, seed):
        n = 3 + seed % 14
        g = generate(spec_parse("tree", n, seed))
        assert len(g.edges) == n - 1
        assert g.is_connected()

    def test_reproducible(self):
        a = generate(spec_parse("tree", 10, 7))
        b = generate(spec_parse("tree", 10, 7))
        assert a.edges == b.edges
        c = generate(spec_parse("tree", 10, 8))
        assert c.edges != a.edges


class TestBoundedTree:
    @pytest.mark.parametrize("seed", range(100))
    def test_degree_bound_holds(self, seed):
        d = 2 + seed % 3
        n = 4 + seed % 12
        g = generate(spec_parse(f"btree:{d}", n, seed))
        assert len(g.edges) == n - 1
        assert g.is_connected()
        assert max(g.degree(i) for i in range(n)) <= d

    @pytest.mark.parametrize("seed", range(20))
    def test_degree_two_is_a_hamiltonian_path(self, seed):
        n = 8
        g = generate(spec_parse("btree:2", n, seed))
        degs = sorted(g.degree(i) for i in range(n))
        assert degs == [1, 1] + [2] * (n - 2)
        assert g.is_connected()


class TestBarabasiAlbert:
    @pytest.mark.parametrize("k,seed", [(1, 0), (1, 5), (2, 1), (3, 2)])
    def test_edge_count(self, k, seed):
        n = 12
        g = generate(spec_parse(f"ba:{k}", n, seed))
        assert len(g.edges) == k * (k - 1) // 2 + (n - k) * k
        assert g.is_connected()

    def test_k1_is_a_tree(self):
        g = generate(spec_parse("ba:1", 15, 3))
        assert g.is_tree()

    def test_reproducible(self):
        a = generate(spec_parse("ba:2", 20, 4))
        b = generate(spec_parse("ba:2", 20, 4))
        assert a.edges == b.edges
