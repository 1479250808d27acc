"""Seeded instance families for property suites and the ``corpus`` command."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .constructions import (
    CkdSpec,
    attach_star,
    gen_cycle,
    gen_ckd,
    gen_hex_patch,
    gen_layered_drum,
    gen_prism,
    subdivide,
    subdivide_all,
)
from .graph import Graph, PlaneEmbedding, girth

DEFAULT_SEED = 20130101


@dataclass(frozen=True)
class Instance:
    name: str
    family: str
    emb: PlaneEmbedding

    @property
    def graph(self) -> Graph:
        return self.emb.graph


def _decorate_subcubic(emb: PlaneEmbedding, rng: random.Random, leaves: int) -> PlaneEmbedding:
    """Hang pendant leaves on random 2-vertices (keeps max degree <= 3)."""
    g = emb.graph
    for _ in range(leaves):
        twos = [v for v in g.vertices() if g.degree(v) == 2]
        if not twos:
            break
        v = rng.choice(twos)
        g, emb = attach_star(g, emb, v, 0, rng.randrange(3))
    return emb


def matching_subdivided_drum(n: int, rng: random.Random) -> PlaneEmbedding:
    """Subdivide a random matching of a layered drum until every face has length >= 6."""
    g, emb = gen_layered_drum(n)
    edges = list(g.edges)
    rng.shuffle(edges)
    matched: set[int] = set()
    times: dict[tuple[int, int], int] = {}
    for u, v in edges:
        if u not in matched and v not in matched and rng.random() < 0.7:
            matched |= {u, v}
            times[(u, v)] = 1
    for f in emb.faces:
        short = 6 - f.length - sum(times.get(e, 0) for e in f.edges)
        fe = list(f.edges)
        rng.shuffle(fe)
        fe.sort(key=lambda e: (e[0] in matched) + (e[1] in matched))
        for e in fe[: max(0, short)]:
            times[e] = times.get(e, 0) + 1
    g, emb = subdivide_all(g, emb, times)
    return emb


def spoke_drum(n: int, rng: random.Random | None = None) -> PlaneEmbedding:
    """Layered drum with every spoke subdivided: all pentagons become 7-faces.

    For ``n >= 6`` the result has no 1-vertex, no adjacent 2-vertices, no
    3-vertex with two 2-neighbors and no 6-face, so the first reducible
    configuration is a 7-face with two 2-vertices. With ``rng`` some spokes
    are subdivided twice instead.
    """
    g, emb = gen_layered_drum(n)
    spokes = [e for e in g.edges if not _same_ring(e, n)]
    times = {e: (2 if rng is not None and rng.random() < 0.2 else 1) for e in spokes}
    return subdivide_all(g, emb, times)[1]


def _same_ring(e: tuple[int, int], n: int) -> bool:
    ring = [0 if x < n else 1 if x < 3 * n else 2 for x in e]
    return ring[0] == ring[1]


def subcubic_instances(seed: int = DEFAULT_SEED, count: int = 120) -> list[Instance]:
    """Subcubic plane graphs of girth >= 6."""
    rng = random.Random(seed)
    out = [Instance(f"hex{r}", "hex", gen_hex_patch(r)[1]) for r in range(1, 5)]
    i = 0
    while len(out) < count:
        family = ("prism", "hex-sub", "drum", "spoke-drum", "drum-leaves")[i % 5]
        if family == "prism":
            g, emb = gen_prism()
            g, emb = subdivide_all(g, emb, {e: rng.randint(1, 3) for e in g.edges})
        elif family == "hex-sub":
            g, emb = gen_hex_patch(rng.randint(1, 3))
            g, emb = subdivide_all(g, emb, {e: rng.choice((0, 0, 1, 2)) for e in g.edges})
        elif family == "spoke-drum":
            emb = spoke_drum(rng.randint(6, 12), rng)
            if rng.random() < 0.3:
                emb = _decorate_subcubic(emb, rng, rng.randint(1, 3))
        else:
            emb = matching_subdivided_drum(rng.randint(4, 9), rng)
            if family == "drum-leaves":
                emb = _decorate_subcubic(emb, rng, rng.randint(1, 4))
        if girth(emb.graph) >= 6 and emb.graph.max_degree <= 3:
            out.append(Instance(f"{family}-{i}", family, emb))
        i += 1
    return out


def _decorate_general(emb: PlaneEmbedding, rng: random.Random, stars: int, paths: int) -> PlaneEmbedding:
    """Attach 4+-stars and pendant 2-paths at random vertices."""
    g = emb.graph
    for _ in range(stars):
        anchor = rng.randrange(g.n)
        g, emb = attach_star(g, emb, anchor, rng.randint(3, 6), rng.randrange(g.degree(anchor) + 1))
    for _ in range(paths):
        anchor = rng.randrange(g.n)
        g, emb = attach_star(g, emb, anchor, 1, rng.randrange(g.degree(anchor) + 1))
    for _ in range(paths):
        anchor = rng.randrange(g.n)
        g, emb = attach_star(g, emb, anchor, 0, rng.randrange(g.degree(anchor) + 1))
    return emb


def general_instances(seed: int = DEFAULT_SEED, count: int = 120) -> list[Instance]:
    """Plane graphs of girth >= 6 with max degree >= 4."""
    rng = random.Random(seed + 1)
    out = []
    for k in (7, 9, 11):
        for d in (4, 5, 6, 7):
            out.append(Instance(f"ckd-{k}-{d}", "ckd", gen_ckd(CkdSpec(k, d))[1]))
    i = 0
    while len(out) < count:
        family = ("ckd-sub", "ckd-stars", "hex-stars", "drum-stars", "prism-stars", "spoke-stars")[i % 6]
        if family.startswith("ckd"):
            k = rng.choice((7, 9, 11, 13))
            g, emb = gen_ckd(CkdSpec(k, rng.randint(4, 8)))
            if family == "ckd-sub":
                for e in rng.sample(list(g.edges), rng.randint(1, 4)):
                    g, emb = subdivide(g, emb, e, rng.randint(1, 2))
            emb = _decorate_general(emb, rng, rng.randint(0, 3), rng.randint(0, 4))
        elif family == "hex-stars":
            g, emb = gen_hex_patch(rng.randint(1, 3))
            emb = _decorate_general(emb, rng, rng.randint(1, 4), rng.randint(0, 6))
        elif family == "spoke-stars":
            emb = spoke_drum(rng.randint(6, 9), rng)
            emb = _decorate_general(emb, rng, rng.randint(1, 2), rng.randint(0, 2))
        elif family == "drum-stars":
            emb = matching_subdivided_drum(rng.randint(4, 7), rng)
            emb = _decorate_general(emb, rng, rng.randint(1, 4), rng.randint(0, 6))
        else:
            g, emb = gen_prism()
            g, emb = subdivide_all(g, emb, {e: rng.randint(1, 2) for e in g.edges})
            emb = _decorate_general(emb, rng, rng.randint(1, 3), rng.randint(0, 6))
        if girth(emb.graph) >= 6 and emb.graph.max_degree >= 4:
            out.append(Instance(f"{family}-{i}", family, emb))
        i += 1
    return out


def small_instances(seed: int = DEFAULT_SEED, count: int = 60) -> list[Instance]:
    """Plane graphs with at most 12 edges, any girth: cycles, trees and small C_k^d."""
    rng = random.Random(seed + 2)
    out = [Instance("prism", "prism", gen_prism()[1])]
    for k, d in ((3, 3), (3, 4), (3, 5), (5, 3)):
        out.append(Instance(f"ckd-{k}-{d}", "ckd", gen_ckd(CkdSpec(k, d))[1]))
    i = 0
    while len(out) < count:
        family = ("cycle", "tree", "cycle-tree")[i % 3]
        if family == "tree":
            g = Graph(2, [(0, 1)])
            emb = PlaneEmbedding(g, [[1], [0]])
            budget = rng.randint(1, 11)
        else:
            g, emb = gen_cycle(rng.randint(3, 9))
            budget = 0 if family == "cycle" else rng.randint(1, 12 - g.m)
        while g.m < 12 and budget > 0:
            anchor = rng.randrange(g.n)
            leaves = min(rng.randint(0, 3), 12 - g.m - 1, budget - 1)
            g, emb = attach_star(g, emb, anchor, leaves, rng.randrange(g.degree(anchor) + 1))
            budget -= leaves + 1
        out.append(Instance(f"{family}-{i}", family, emb))
        i += 1
    return out


def full_corpus(seed: int = DEFAULT_SEED, count: int = 120) -> list[Instance]:
    return subcubic_instances(seed, count) + general_instances(seed, count)


def iter_small(instances: list[Instance], max_edges: int) -> Iterator[Instance]:
    return (inst for inst in instances if inst.graph.m <= max_edges)
