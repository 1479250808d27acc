from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_strong_coloring, small_graphs
from oracles import conflict_pairs, is_strong
from strongcolor.coloring import (
    ColoringError,
    GreedyFailure,
    StrongColoring,
    color_greedy,
    conflict_graph,
    find_conflicts,
    free_colors,
    verify_strong,
)
from strongcolor.constructions import gen_cycle, gen_prism
from strongcolor.graph import build_graph


def test_palette_bounds():
    with pytest.raises(ColoringError):
        StrongColoring({(0, 1): 3}, 3)
    c = StrongColoring({}, 2)
    with pytest.raises(ColoringError):
        c.assign((0, 1), 2)


def test_keys_are_normalized():
    c = StrongColoring({(1, 0): 0}, 1)
    assert c[(0, 1)] == 0 and (1, 0) in c


class TestVerify:
    def test_distance_one_and_two(self):
        g = build_graph([(0, 1), (1, 2), (2, 3)])
        bad = verify_strong(g, StrongColoring({(0, 1): 0, (1, 2): 1, (2, 3): 0}, 2))
        assert not bad and [(x.first, x.second, x.distance) for x in bad.conflicts] == [((0, 1), (2, 3), 2)]
        bad = verify_strong(g, StrongColoring({(0, 1): 0, (1, 2): 0, (2, 3): 1}, 2))
        assert [x.distance for x in bad.conflicts] == [1]
        assert verify_strong(g, StrongColoring({(0, 1): 0, (1, 2): 1, (2, 3): 2}, 3))

    def test_far_edges_may_share(self):
        g = build_graph([(0, 1), (1, 2), (2, 3), (3, 4)])
        assert verify_strong(g, StrongColoring({(0, 1): 0, (1, 2): 1, (2, 3): 2, (3, 4): 0}, 3))

    def test_partial_and_foreign(self):
        g = build_graph([(0, 1), (1, 2)])
        with pytest.raises(ColoringError):
            verify_strong(g, StrongColoring({(0, 1): 0}, 2))
        with pytest.raises(ColoringError):
            verify_strong(g, StrongColoring({(0, 1): 0, (1, 2): 1, (0, 2): 2}, 3))
        assert find_conflicts(g, StrongColoring({(0, 1): 0}, 2)) == []

    @given(small_graphs(), st.integers(1, 6), st.randoms(use_true_random=False))
    @settings(max_examples=200, deadline=None)
    def test_agrees_with_oracle(self, g, k, rnd):
        colors = {e: rnd.randrange(k) for e in g.edges}
        verdict = verify_strong(g, StrongColoring(colors, k))
        assert verdict.valid == is_strong(g.edges, colors)


class TestConflictGraph:
    def test_prism_is_complete(self):
        cg = conflict_graph(gen_prism()[0])
        assert len(cg.nodes) == 9 and cg.is_complete()

    def test_c6(self):
        cg = conflict_graph(gen_cycle(6)[0])
        assert all(cg.degree(i) == 4 for i in range(6))

    @given(small_graphs())
    @settings(max_examples=150, deadline=None)
    def test_links_match_oracle(self, g):
        assert conflict_graph(g).links == conflict_pairs(g.edges)


class TestGreedy:
    def test_free_colors(self):
        g = build_graph([(0, 1), (1, 2), (2, 3)])
        c = StrongColoring({(0, 1): 0, (2, 3): 2}, 4)
        assert free_colors(g, c, (1, 2)) == {1, 3}
        with pytest.raises(ColoringError):
            free_colors(g, c, (0, 1))

    def test_failure_is_reported(self):
        g, _ = gen_prism()
        out = color_greedy(g, None, 8)
        assert isinstance(out, GreedyFailure) and not out
        assert out.blocking_edge in g.edges and len(out.partial) == 8

    def test_keeps_initial(self):
        g = build_graph([(0, 1), (1, 2), (2, 3)])
        out = color_greedy(g, None, 4, StrongColoring({(1, 2): 3}, 4))
        assert out[(1, 2)] == 3 and verify_strong(g, out)

    @given(small_graphs(), st.randoms(use_true_random=False))
    @settings(max_examples=100, deadline=None)
    def test_palette_m_always_suffices(self, g, rnd):
        order = list(g.edges)
        rnd.shuffle(order)
        out = color_greedy(g, order, g.m)
        assert out and verify_strong(g, out)


def test_random_sampler_is_strong():
    g, _ = gen_cycle(9)
    c = random_strong_coloring(g, g.edges, 5, random.Random(3))
    assert verify_strong(g, c)
