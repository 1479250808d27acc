"""Instance generators with embeddings, the pendant-edge coloring of C_k^d, and bounds.

``C_k^d`` is an odd ``k``-cycle whose vertices each carry ``d - 2`` leaves.
Cycle vertex ``v_i`` (1-based) has id ``i - 1``; its leaves follow the cycle
ids in order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .coloring import StrongColoring
from .graph import Edge, Graph, GraphError, PlaneEmbedding, edge_key


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def rotation_from_positions(g: Graph, pos: Mapping[int, tuple[float, float]]) -> list[tuple[int, ...]]:
    """Clockwise neighbor order around each vertex of a straight-line drawing."""
    rot = []
    for v in g.vertices():
        x0, y0 = pos[v]
        rot.append(tuple(sorted(g.neighbors(v), key=lambda w: -math.atan2(pos[w][1] - y0, pos[w][0] - x0))))
    return rot


# ---------------------------------------------------------------------------
# C_k^d
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CkdSpec:
    k: int
    d: int

    def __post_init__(self) -> None:
        if self.k < 3 or self.k % 2 == 0:
            raise ValueError(f"k must be odd and at least 3, got {self.k}")
        if self.d < 3:
            raise ValueError(f"d must be at least 3, got {self.d}")
        if 2 * self.t + 1 > self.k:
            raise ValueError(f"2t+1 = {2 * self.t + 1} exceeds k = {self.k}")

    @property
    def ell(self) -> int:
        return _ceil_div(2 * (self.d - 2), self.k - 1)

    @property
    def t(self) -> int:
        return _ceil_div(self.d - 2, self.ell)

    @property
    def pendant_palette(self) -> int:
        return 2 * (self.d - 2) + self.ell

    def leaf(self, i: int, j: int) -> int:
        """Id of the ``j``-th leaf (1-based) of cycle vertex ``v_i`` (1-based)."""
        return self.k + (i - 1) * (self.d - 2) + (j - 1)

    def cycle_edges(self) -> list[Edge]:
        return [edge_key(i, (i + 1) % self.k) for i in range(self.k)]


def gen_ckd(spec: CkdSpec) -> tuple[Graph, PlaneEmbedding]:
    k, p = spec.k, spec.d - 2
    n = k + k * p
    edges = spec.cycle_edges()
    for i in range(1, k + 1):
        edges += [(i - 1, spec.leaf(i, j)) for j in range(1, p + 1)]
    g = Graph(n, edges)
    rot: list[tuple[int, ...]] = []
    for i in range(k):
        leaves = tuple(spec.leaf(i + 1, j) for j in range(1, p + 1))
        rot.append(((i - 1) % k, (i + 1) % k) + leaves)
    for leaf in range(k, n):
        rot.append(tuple(g.neighbors(leaf)))
    return g, PlaneEmbedding(g, rot)


def pendant_color_sets(spec: CkdSpec) -> list[list[int]]:
    """Color lists ``C_1..C_k`` for the leaves of ``v_1..v_k``."""
    p, palette, t = spec.d - 2, spec.pendant_palette, spec.t
    sets = [[(j + (i - 1) * p) % palette for j in range(1, p + 1)] for i in range(1, 2 * t + 2)]
    for i in range(2 * t + 2, spec.k + 1):
        sets.append(sets[2 * t - 1] if i % 2 == 0 else sets[2 * t])
    return sets


def pendant_coloring_ckd(spec: CkdSpec) -> StrongColoring:
    """Partial coloring of the pendant edges with ``2(d-2) + ell`` colors."""
    c = StrongColoring({}, spec.pendant_palette)
    for i, colors in enumerate(pendant_color_sets(spec), start=1):
        for j, color in enumerate(colors, start=1):
            c.assign((i - 1, spec.leaf(i, j)), color)
    return c


def complete_ckd_coloring(spec: CkdSpec, pendants: StrongColoring) -> StrongColoring:
    """Color the cycle with fresh colors from an exact solve of ``C_k``."""
    from .exact import strong_chromatic_index

    cycle = Graph(spec.k, spec.cycle_edges())
    solved = strong_chromatic_index(cycle)
    base = pendants.palette_size
    out = StrongColoring(dict(pendants.assignment), base + solved.index)
    for e, color in solved.witness.assignment.items():
        out.assign(e, base + color)
    return out


# ---------------------------------------------------------------------------
# Other families
# ---------------------------------------------------------------------------


def gen_cycle(n: int) -> tuple[Graph, PlaneEmbedding]:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    g = Graph(n, [(i, (i + 1) % n) for i in range(n)])
    return g, PlaneEmbedding(g, [((i - 1) % n, (i + 1) % n) for i in range(n)])


def gen_prism() -> tuple[Graph, PlaneEmbedding]:
    """Triangles 0-2-4 and 1-3-5 joined by 0-3, 1-4, 2-5 (the complement of C_6)."""
    g = Graph(6, [(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5), (0, 3), (1, 4), (2, 5)])
    pos = {}
    for slot, (outer, inner) in enumerate([(0, 3), (2, 5), (4, 1)]):
        a = math.pi / 2 + 2 * math.pi * slot / 3
        pos[outer] = (2 * math.cos(a), 2 * math.sin(a))
        pos[inner] = (math.cos(a), math.sin(a))
    return g, PlaneEmbedding(g, rotation_from_positions(g, pos))


def gen_hex_patch(rings: int) -> tuple[Graph, PlaneEmbedding]:
    """Hexagons within distance ``rings - 1`` of a central one (1 ring is C_6)."""
    if rings < 1:
        raise ValueError("rings must be at least 1")
    R = rings - 1
    centers = [(q, r) for q in range(-R, R + 1) for r in range(-R, R + 1) if abs(q + r) <= R]
    centers.sort(key=lambda c: (max(abs(c[0]), abs(c[1]), abs(c[0] + c[1])), c))
    ids: dict[tuple[float, float], int] = {}
    pos: dict[int, tuple[float, float]] = {}
    edges: set[Edge] = set()
    for q, r in centers:
        cx, cy = math.sqrt(3) * (q + r / 2), 1.5 * r
        corner_ids = []
        for s in range(6):
            a = math.pi / 6 + s * math.pi / 3
            x, y = cx + math.cos(a), cy + math.sin(a)
            key = (round(x, 6) + 0.0, round(y, 6) + 0.0)
            if key not in ids:
                ids[key] = len(ids)
                pos[ids[key]] = (x, y)
            corner_ids.append(ids[key])
        for s in range(6):
            edges.add(edge_key(corner_ids[s], corner_ids[(s + 1) % 6]))
    g = Graph(len(ids), sorted(edges))
    return g, PlaneEmbedding(g, rotation_from_positions(g, pos))


def gen_layered_drum(n: int) -> tuple[Graph, PlaneEmbedding]:
    """Cubic plane graph: outer ``n``-cycle, middle ``2n``-cycle, inner ``n``-cycle.

    Spokes join outer vertex ``i`` to middle vertex ``2i`` and inner vertex
    ``i`` to middle vertex ``2i + 1``. Faces are two ``n``-gons and ``2n``
    pentagons; ``n = 5`` is the dodecahedron.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    outer = list(range(n))
    middle = list(range(n, 3 * n))
    inner = list(range(3 * n, 4 * n))
    edges = []
    for i in range(n):
        edges.append((outer[i], outer[(i + 1) % n]))
        edges.append((inner[i], inner[(i + 1) % n]))
        edges.append((outer[i], middle[2 * i]))
        edges.append((inner[i], middle[2 * i + 1]))
    for j in range(2 * n):
        edges.append((middle[j], middle[(j + 1) % (2 * n)]))
    g = Graph(4 * n, edges)
    pos = {}
    for i in range(n):
        a = 2 * math.pi * i / n
        b = a + math.pi / n
        pos[outer[i]] = (3 * math.cos(a), 3 * math.sin(a))
        pos[middle[2 * i]] = (2 * math.cos(a), 2 * math.sin(a))
        pos[middle[2 * i + 1]] = (2 * math.cos(b), 2 * math.sin(b))
        pos[inner[i]] = (math.cos(b), math.sin(b))
    return g, PlaneEmbedding(g, rotation_from_positions(g, pos))


# ---------------------------------------------------------------------------
# Local operations on embedded graphs
# ---------------------------------------------------------------------------


def subdivide(g: Graph, emb: PlaneEmbedding, edge: Sequence[int], times: int = 1) -> tuple[Graph, PlaneEmbedding]:
    """Replace ``edge`` by a path through ``times`` new 2-vertices."""
    u, v = edge
    if not g.has_edge(u, v):
        raise GraphError(f"unknown edge ({u}, {v})")
    if times < 1:
        raise ValueError("times must be at least 1")
    new = list(range(g.n, g.n + times))
    path = [u, *new, v]
    edges = [e for e in g.edges if e != edge_key(u, v)]
    edges += [(path[i], path[i + 1]) for i in range(len(path) - 1)]
    rot = [list(r) for r in emb.rotation]
    rot[u] = [new[0] if w == v else w for w in rot[u]]
    rot[v] = [new[-1] if w == u else w for w in rot[v]]
    for i, x in enumerate(new):
        rot.append([path[i], path[i + 2]])
    h = Graph(g.n + times, edges)
    return h, PlaneEmbedding(h, rot)


def subdivide_all(g: Graph, emb: PlaneEmbedding, times: int | Mapping[Edge, int]) -> tuple[Graph, PlaneEmbedding]:
    for e in list(g.edges):
        t = times if isinstance(times, int) else times.get(e, 0)
        if t:
            g, emb = subdivide(g, emb, e, t)
    return g, emb


def attach_star(
    g: Graph, emb: PlaneEmbedding, anchor: int, leaves: int, slot: int = 0
) -> tuple[Graph, PlaneEmbedding]:
    """Hang a new hub with ``leaves`` pendant leaves off ``anchor``.

    The hub goes into ``anchor``'s rotation at position ``slot``; with
    ``leaves = 0`` this just adds a pendant vertex.
    """
    hub = g.n
    leaf_ids = list(range(hub + 1, hub + 1 + leaves))
    edges = list(g.edges) + [(anchor, hub)] + [(hub, x) for x in leaf_ids]
    rot = [list(r) for r in emb.rotation]
    r = rot[anchor]
    r.insert(slot % (len(r) + 1), hub)
    rot.append([anchor, *leaf_ids])
    rot.extend([hub] for _ in leaf_ids)
    h = Graph(hub + 1 + leaves, edges)
    return h, PlaneEmbedding(h, rot)


# ---------------------------------------------------------------------------
# Bounds
# ---------------------------------------------------------------------------

BOUND_KINDS = ("ckd_lower", "ckd_upper", "conjecture19", "erdos_nesetril", "molloy_reed")


def evaluate_bounds(kind: str, **params: int | Fraction) -> int | Fraction:
    """Exact evaluation of the closed-form bounds.

    ``ckd_lower``/``ckd_upper`` take ``k, d``; ``conjecture19`` takes
    ``k`` (girth), ``delta`` and the free constant ``C``; ``erdos_nesetril``
    and ``molloy_reed`` take ``delta``.
    """
    try:
        if kind == "ckd_lower":
            s = CkdSpec(int(params["k"]), int(params["d"]))
            return _ceil_div(2 * s.k * (s.d - 1), s.k - 1)
        if kind == "ckd_upper":
            s = CkdSpec(int(params["k"]), int(params["d"]))
            return _ceil_div(2 * s.k * (s.d - 2), s.k - 1) + 5
        if kind == "conjecture19":
            k, delta = int(params["k"]), int(params["delta"])
            if k < 5 or delta < 1:
                raise ValueError("conjecture19 needs girth k >= 5 and delta >= 1")
            return _ceil_div(2 * k * (delta - 1), k - 1) + Fraction(params.get("C", 0))
        if kind == "erdos_nesetril":
            delta = int(params["delta"])
            if delta < 0:
                raise ValueError("delta must be nonnegative")
            if delta % 2 == 0:
                return Fraction(5 * delta * delta, 4)
            return Fraction(5 * delta * delta - 2 * delta + 1, 4)
        if kind == "molloy_reed":
            delta = int(params["delta"])
            if delta < 0:
                raise ValueError("delta must be nonnegative")
            return Fraction("1.998") * delta * delta
    except KeyError as exc:
        raise ValueError(f"{kind} is missing parameter {exc.args[0]!r}") from None
    raise ValueError(f"unknown bound kind {kind!r}; expected one of {', '.join(BOUND_KINDS)}")
