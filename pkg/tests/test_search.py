import itertools

import pytest

from powerdom import (
    Graph,
    ParameterError,
    SolverConfig,
    allminpds,
    combination_rank,
    combination_unrank,
    erdos_renyi_connected,
    is_power_dominating_set,
    solve,
    subset_counts,
)

from oracles import oracle_pdn, random_graph

ZIM_TABLE_SETS = [
    {"1", "9"}, {"2", "9"}, {"2", "10"}, {"2", "11"}, {"5", "9"},
    {"5", "10"}, {"5", "11"}, {"3", "9"}, {"7", "9"}, {"7", "10"},
    {"7", "11"}, {"4", "9"}, {"9", "8"},
]


class TestCombinatorics:
    def test_first_combination(self):
        assert combination_unrank(4, 2, 0) == [0, 1]

    def test_last_combination(self):
        assert combination_unrank(4, 2, 5) == [2, 3]

    def test_rank_out_of_range(self):
        with pytest.raises(ParameterError):
            combination_unrank(4, 2, 6)

    def test_bijection_exhaustive_up_to_n12(self):
        for n in range(13):
            for k in range(n + 1):
                combos = list(itertools.combinations(range(n), k))
                for rank, combo in enumerate(combos):
                    assert combination_unrank(n, k, rank) == list(combo)
                    assert combination_rank(n, list(combo)) == rank


class TestSubsetCounts:
    def test_ieee39_naive_count(self):
        n, _ = subset_counts(39, 5, 37, 3, 19, 4)
        assert n == 92171

    def test_pdn_one_gives_one(self):
        assert subset_counts(10, 1, 10, 0, 0, 0)[0] == 1

    def test_ieee39_reduced_count_printed_formula(self):
        # upper limit pdn-1-p: sum of C(11, i) for i in {0, 1}
        _, n_prime = subset_counts(39, 5, 37, 3, 19, 4)
        assert n_prime == 12

    def test_empty_sum_when_pref_covers_levels(self):
        assert subset_counts(10, 2, 10, 3, 0, 0)[1] == 0

    def test_reduced_never_exceeds_naive(self):
        for args in [(39, 5, 37, 3, 19, 4), (12, 3, 10, 1, 4, 2), (5, 1, 5, 0, 0, 0)]:
            n, n_prime = subset_counts(*args)
            assert n_prime <= n

    def test_negative_rejected(self):
        with pytest.raises(ParameterError):
            subset_counts(5, -1, 5, 0, 0, 0)


class TestSolve:
    def test_zim(self, zim):
        res = solve(zim, SolverConfig(workers=1))
        assert res.pdn == 2
        assert res.pds == ("9", "5")

    def test_fig3(self, fig3):
        res = solve(fig3)
        assert res.pdn == 1
        assert res.pds == ("1",)

    def test_ieee39(self, ieee39):
        res = solve(ieee39, SolverConfig(workers=1))
        assert res.pdn == 5
        assert is_power_dominating_set(ieee39, res.pds)
        assert res.diagnostics.n_formula == 92171
        assert res.diagnostics.removed_by_contraction == 2
        assert res.diagnostics.p == 3
        assert res.diagnostics.candidates == 11

    def test_path_p7(self):
        labels = [str(i) for i in range(7)]
        p7 = Graph(labels, [(labels[i], labels[i + 1]) for i in range(6)])
        res = solve(p7)
        assert res.pdn == 1
        assert res.pds == ("0",)

    def test_cycle(self):
        labels = [str(i) for i in range(6)]
        c6 = Graph(labels, [(labels[i], labels[(i + 1) % 6]) for i in range(6)])
        assert solve(c6).pdn == 1

    def test_empty_graph(self):
        res = solve(Graph())
        assert res.pdn == 0
        assert res.pds == ()
        assert res.per_component == ()

    def test_single_node(self):
        res = solve(Graph(["a"]))
        assert res.pdn == 1
        assert res.pds == ("a",)

    def test_disconnected_sums_components(self, zim, path5):
        labels = list(zim.nodes) + list(path5.nodes)
        edges = list(zim.edges()) + list(path5.edges())
        g = Graph(labels, edges)
        res = solve(g)
        assert res.pdn == 3
        assert len(res.per_component) == 2
        assert sum(pdn for _, pdn, _ in res.per_component) == 3
        assert is_power_dominating_set(g, res.pds)

    def test_naive_mode_agrees(self, zim, fig3):
        for g in (zim, fig3):
            assert solve(g, SolverConfig(mode="naive")).pdn == solve(g).pdn

    def test_minimality_small_graphs(self):
        for seed in range(25):
            g = random_graph(seed, 8, 0.3)
            res = solve(g)
            nodes = sorted(g.nodes)
            for k in range(1, res.pdn):
                for subset in itertools.combinations(nodes, k):
                    assert not is_power_dominating_set(g, subset)

    def test_diagnostics_monotone(self, zim, ieee39):
        for g in (zim, ieee39):
            for mode in ("optimized", "naive"):
                d = solve(g, SolverConfig(mode=mode)).diagnostics
                assert d.n_prime_formula <= d.n_formula
                assert d.subsets_checked >= 0

    def test_oracle_equivalence_sample(self):
        checked = 0
        seed = 0
        while checked < 40:
            seed += 1
            g = erdos_renyi_connected(4 + seed % 9, 0.3, seed)
            opt = solve(g, SolverConfig(workers=1))
            naive = solve(g, SolverConfig(workers=1, mode="naive"))
            expected = oracle_pdn(g)
            assert opt.pdn == naive.pdn == expected, seed
            assert is_power_dominating_set(g, opt.pds)
            assert is_power_dominating_set(g, naive.pds)
            checked += 1

    def test_count_subsets_switch(self, zim):
        res = solve(zim, SolverConfig(count_subsets=False))
        assert res.diagnostics.subsets_checked == 0

    def test_invalid_config(self):
        with pytest.raises(ParameterError):
            SolverConfig(workers=0)
        with pytest.raises(ParameterError):
            SolverConfig(chunk_size=0)
        with pytest.raises(ParameterError):
            SolverConfig(mode="fast")


class TestParallelDeterminism:
    @pytest.mark.parametrize("builtin", ["zim", "ieee39"])
    def test_builtin_graphs(self, builtin):
        from powerdom import builtin_graph

        g = builtin_graph(builtin)
        outputs = {
            w: solve(g, SolverConfig(workers=w, chunk_size=4))
            for w in (1, 2, 8)
        }
        base = outputs[1]
        for res in outputs.values():
            assert res.pdn == base.pdn
            assert res.pds == base.pds
            assert res.diagnostics.subsets_checked == base.diagnostics.subsets_checked

    def test_random_graphs(self):
        for seed in range(5):
            g = erdos_renyi_connected(30, 0.15, seed)
            results = [
                solve(g, SolverConfig(workers=w, chunk_size=8)) for w in (1, 2, 8)
            ]
            assert len({(r.pdn, r.pds, r.diagnostics.subsets_checked) for r in results}) == 1


class TestAllMinPds:
    def test_zim_matches_published_table(self, zim):
        sets = allminpds(zim, SolverConfig(workers=1))
        assert len(sets) == 13
        assert {frozenset(s) for s in sets} == {frozenset(s) for s in ZIM_TABLE_SETS}

    def test_k1(self):
        assert allminpds(Graph(["a"])) == [frozenset({"a"})]

    def test_cycle_c4_all_singletons(self):
        labels = [str(i) for i in range(4)]
        c4 = Graph(labels, [(labels[i], labels[(i + 1) % 4]) for i in range(4)])
        assert allminpds(c4) == [frozenset({l}) for l in labels]

    def test_empty_graph_rejected(self):
        with pytest.raises(ParameterError):
            allminpds(Graph())

    def test_worker_count_does_not_change_output(self, zim):
        a = allminpds(zim, SolverConfig(workers=1, chunk_size=4))
        b = allminpds(zim, SolverConfig(workers=8, chunk_size=4))
        assert a == b
