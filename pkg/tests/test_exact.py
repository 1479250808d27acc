from __future__ import annotations

import pytest
from hypothesis import given, settings

from helpers import small_graphs
from oracles import chi_s_bruteforce, chi_s_partition, is_strong
from strongcolor.coloring import verify_strong
from strongcolor.constructions import CkdSpec, gen_ckd, gen_cycle, gen_prism
from strongcolor.exact import (
    BudgetExhausted,
    SolverConfig,
    clique_lower_bound,
    is_k_strong_colorable,
    strong_chromatic_index,
)
from strongcolor.graph import build_graph


def _witness_ok(g, res):
    assert verify_strong(g, res.witness)
    assert res.witness.num_colors() <= res.index
    assert is_strong(g.edges, res.witness.assignment)


class TestGolden:
    def test_prism(self):
        g, _ = gen_prism()
        res = strong_chromatic_index(g)
        assert res.index == 9
        _witness_ok(g, res)

    def test_c55(self):
        g, _ = gen_ckd(CkdSpec(5, 5))
        res = strong_chromatic_index(g)
        assert res.index == 10 and 9 in res.certified_infeasible
        assert is_k_strong_colorable(g, 9) is None
        _witness_ok(g, res)

    def test_c53(self):
        g, _ = gen_ckd(CkdSpec(5, 3))
        res = strong_chromatic_index(g)
        assert res.index == 5 and is_k_strong_colorable(g, 4) is None
        _witness_ok(g, res)

    @pytest.mark.parametrize("n,expected", [(3, 3), (4, 4), (5, 5), (6, 3), (7, 4), (8, 4), (9, 3)])
    def test_cycles(self, n, expected):
        assert strong_chromatic_index(gen_cycle(n)[0]).index == expected


class TestAgainstOracles:
    @given(small_graphs(max_n=7, max_m=9))
    @settings(max_examples=120, deadline=None)
    def test_index_matches_partition_dp(self, g):
        res = strong_chromatic_index(g)
        assert res.index == chi_s_partition(g.edges)
        _witness_ok(g, res)

    @given(small_graphs(max_n=5, max_m=5))
    @settings(max_examples=60, deadline=None)
    def test_partition_dp_matches_bruteforce(self, g):
        assert chi_s_partition(g.edges) == chi_s_bruteforce(g.edges)

    def test_corpus_small(self, small_corpus):
        for inst in small_corpus:
            assert strong_chromatic_index(inst.graph).index == chi_s_partition(inst.graph.edges), inst.name


class TestBudget:
    def test_node_limit_is_not_infeasible(self):
        g, _ = gen_ckd(CkdSpec(5, 5))
        with pytest.raises(BudgetExhausted) as info:
            strong_chromatic_index(g, SolverConfig(node_limit=5))
        assert info.value.nodes >= 5

    def test_time_limit(self):
        g, _ = gen_ckd(CkdSpec(3, 9))
        with pytest.raises(BudgetExhausted):
            strong_chromatic_index(g, SolverConfig(time_limit=0.0))

    def test_max_colors(self):
        with pytest.raises(BudgetExhausted):
            strong_chromatic_index(gen_prism()[0], SolverConfig(max_colors=8))

    def test_bad_inputs(self):
        with pytest.raises(ValueError):
            strong_chromatic_index(build_graph([], 3))
        with pytest.raises(ValueError):
            is_k_strong_colorable(gen_prism()[0], 0)
        with pytest.raises(ValueError):
            SolverConfig(max_colors=0)


def test_clique_bound():
    assert clique_lower_bound(gen_ckd(CkdSpec(5, 5))[0]) == 9
    assert clique_lower_bound(build_graph([(0, 1)])) == 1


def test_deterministic_witness():
    g, _ = gen_ckd(CkdSpec(7, 4))
    a, b = strong_chromatic_index(g), strong_chromatic_index(g)
    assert a.index == b.index and a.witness == b.witness


def test_parallel_matches_sequential():
    g, _ = gen_ckd(CkdSpec(5, 4))
    seq = strong_chromatic_index(g)
    par = strong_chromatic_index(g, SolverConfig(workers=2, split_depth=2))
    assert par.index == seq.index
    assert par.witness == seq.witness
    assert par.certified_infeasible == seq.certified_infeasible
