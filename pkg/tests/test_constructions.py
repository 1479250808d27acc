from __future__ import annotations

import math
from fractions import Fraction

import pytest

from oracles import girth_by_deletion, is_strong
from strongcolor.coloring import find_conflicts, verify_strong
from strongcolor.constructions import (
    CkdSpec,
    attach_star,
    complete_ckd_coloring,
    evaluate_bounds,
    gen_ckd,
    gen_cycle,
    gen_hex_patch,
    gen_layered_drum,
    gen_prism,
    pendant_color_sets,
    pendant_coloring_ckd,
    subdivide,
    subdivide_all,
)
from strongcolor.graph import GraphError, girth

SPECS = [(k, d) for k in range(3, 16, 2) for d in range(3, 13) if 2 * CkdSpec(k, d).t + 1 <= k]


class TestCkd:
    def test_invalid(self):
        for k, d in ((4, 3), (1, 3), (5, 2)):
            with pytest.raises(ValueError):
                CkdSpec(k, d)

    def test_c55_shape(self):
        g, emb = gen_ckd(CkdSpec(5, 5))
        assert (g.n, g.m, girth(g), g.max_degree) == (20, 20, 5, 5)
        assert len(emb.faces) == 2 and emb.euler_ok()

    def test_c33(self):
        g, _ = gen_ckd(CkdSpec(3, 3))
        assert g.m == 6 and girth(g) == 3

    @pytest.mark.parametrize("k,d", SPECS[::7])
    def test_invariants(self, k, d):
        g, emb = gen_ckd(CkdSpec(k, d))
        assert g.m == (d - 1) * k
        assert girth_by_deletion(g.n, g.edges) == k
        assert sum(1 for v in g.vertices() if g.degree(v) == d) == k
        assert emb.euler_ok()

    def test_all_grid_specs_are_valid(self):
        # CkdSpec enforces 2t + 1 <= k; every grid point must satisfy it
        assert len(SPECS) == 7 * 10


class TestPendants:
    def test_c55_sets(self):
        sets = pendant_color_sets(CkdSpec(5, 5))
        assert [set(s) for s in sets] == [{1, 2, 3}, {4, 5, 6}, {7, 0, 1}, {2, 3, 4}, {5, 6, 7}]
        assert CkdSpec(5, 5).pendant_palette == 8

    def test_c33_sets(self):
        sets = pendant_color_sets(CkdSpec(3, 3))
        assert CkdSpec(3, 3).ell == 1
        assert sorted(c for s in sets for c in s) == [0, 1, 2]

    @pytest.mark.parametrize("k,d", SPECS)
    def test_formula_verifies(self, k, d):
        spec = CkdSpec(k, d)
        g, _ = gen_ckd(spec)
        pend = pendant_coloring_ckd(spec)
        sets = pendant_color_sets(spec)
        for i in range(k):
            assert not set(sets[i]) & set(sets[(i + 1) % k]), (k, d, i)
        assert find_conflicts(g, pend) == []
        pendant_edges = [e for e in g.edges if e not in spec.cycle_edges()]
        sub = type(g)(g.n, pendant_edges)
        assert verify_strong(sub, pend)
        assert pend.num_colors() == 2 * (d - 2) + spec.ell
        full = complete_ckd_coloring(spec, pend)
        assert verify_strong(g, full) and is_strong(g.edges, full.assignment)
        assert full.num_colors() <= evaluate_bounds("ckd_upper", k=k, d=d)

    def test_c94_cycle_uses_three(self):
        spec = CkdSpec(9, 4)
        pend = pendant_coloring_ckd(spec)
        full = complete_ckd_coloring(spec, pend)
        cycle_colors = {full[e] for e in spec.cycle_edges()}
        assert len(cycle_colors) == 3 and not cycle_colors & pend.colors()

    def test_c55_total(self):
        spec = CkdSpec(5, 5)
        assert complete_ckd_coloring(spec, pendant_coloring_ckd(spec)).num_colors() <= 13


class TestOtherFamilies:
    def test_prism(self):
        g, emb = gen_prism()
        assert (g.m, g.max_degree, len(emb.faces)) == (9, 3, 5)

    def test_hex_patches(self):
        assert gen_hex_patch(1)[0] == gen_cycle(6)[0]
        for r in range(1, 5):
            g, emb = gen_hex_patch(r)
            assert girth(g) == 6 and g.max_degree <= 3 and emb.euler_ok()
            bounded = [f for f in emb.faces if f.length == 6]
            assert len(bounded) == 3 * r * (r - 1) + 1 + (r == 1)
        with pytest.raises(ValueError):
            gen_hex_patch(0)

    def test_drum_is_dodecahedron(self):
        g, emb = gen_layered_drum(5)
        assert (g.n, g.m) == (20, 30)
        assert all(g.degree(v) == 3 for v in g.vertices())
        assert sorted(f.length for f in emb.faces) == [5] * 12

    def test_cycle_needs_three(self):
        with pytest.raises(GraphError):
            gen_cycle(2)


class TestSubdivide:
    def test_c6_to_c7(self):
        g, emb = gen_cycle(6)
        h, h_emb = subdivide(g, emb, (0, 1), 1)
        assert h.m == 7 and girth(h) == 7 and sorted(f.length for f in h_emb.faces) == [7, 7]

    def test_prism_twice(self):
        g, emb = gen_prism()
        h, h_emb = subdivide_all(g, emb, 2)
        assert girth(h) == 9 and h.max_degree == 3
        assert len(h_emb.faces) == len(emb.faces) and h_emb.euler_ok()
        assert sum(f.length for f in h_emb.faces) == 2 * h.m

    def test_face_lengths_grow(self):
        g, emb = gen_prism()
        edge = g.edges[0]
        h, h_emb = subdivide(g, emb, edge, 3)
        before = sorted(f.length + 3 * (edge in f.edges) for f in emb.faces)
        assert sorted(f.length for f in h_emb.faces) == before

    def test_unknown_edge(self):
        g, emb = gen_cycle(5)
        with pytest.raises(GraphError):
            subdivide(g, emb, (0, 2), 1)

    def test_attach_star(self):
        g, emb = gen_cycle(6)
        h, h_emb = attach_star(g, emb, 0, 4)
        assert h.degree(6) == 5 and h.degree(0) == 3 and h_emb.euler_ok()


class TestBounds:
    def test_values(self):
        assert evaluate_bounds("ckd_lower", k=5, d=5) == 10
        assert evaluate_bounds("ckd_upper", k=5, d=5) == 13
        assert evaluate_bounds("erdos_nesetril", delta=5) == 29
        assert evaluate_bounds("erdos_nesetril", delta=4) == 20
        assert evaluate_bounds("molloy_reed", delta=10) == Fraction(1998, 10)
        assert evaluate_bounds("conjecture19", k=5, delta=5, C=2) == 12

    def test_matches_float_ceiling(self):
        for k, d in SPECS:
            assert evaluate_bounds("ckd_lower", k=k, d=d) == math.ceil(Fraction(2 * k * (d - 1), k - 1))

    @pytest.mark.parametrize("k,d", SPECS)
    def test_upper_within_three_of_lower(self, k, d):
        assert evaluate_bounds("ckd_upper", k=k, d=d) <= evaluate_bounds("ckd_lower", k=k, d=d) + 3

    def test_errors(self):
        with pytest.raises(ValueError):
            evaluate_bounds("nope", delta=3)
        with pytest.raises(ValueError):
            evaluate_bounds("ckd_lower", k=5)
        with pytest.raises(ValueError):
            evaluate_bounds("conjecture19", k=3, delta=4)
