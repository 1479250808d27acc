"""Sampling helpers shared by the test modules."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from strongcolor.coloring import StrongColoring, free_colors
from strongcolor.graph import Graph


def random_strong_coloring(g: Graph, edges, palette: int, rng: random.Random, tries: int = 200):
    """Random-order, random-choice greedy strong coloring of ``edges``; restarts on a dead end."""
    edges = list(edges)
    for _ in range(tries):
        rng.shuffle(edges)
        c = StrongColoring({}, palette)
        for e in edges:
            free = sorted(free_colors(g, c, e))
            if not free:
                break
            c.assign(e, rng.choice(free))
        else:
            return c
    raise RuntimeError("could not sample a coloring")


@st.composite
def small_graphs(draw, max_n: int = 7, max_m: int = 10):
    n = draw(st.integers(2, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1, max_size=min(max_m, len(pairs))))
    return Graph(n, chosen)
