"""Simple graphs, rotation-system embeddings, face tracing and vertex taxonomy.

Vertex ids are ``0..n-1`` and stay stable under deletion: removing a vertex
leaves it isolated, so colorings keyed by edge pairs survive a reduction step
unchanged.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]
Dart = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs or embeddings."""


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# ---------------------------------------------------------------------------
# Graph
# ---------------------------------------------------------------------------


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "_adj", "_edges", "__dict__")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]) -> None:
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        seen: set[Edge] = set()
        for pair in edges:
            u, v = int(pair[0]), int(pair[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"vertex id out of range in edge ({u}, {v}) for n={n}")
            if u == v:
                raise GraphError(f"loop edge ({u}, {v})")
            key = edge_key(u, v)
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(a) for a in adj)
        self._edges = tuple(sorted(seen))

    # -- basic accessors ----------------------------------------------------

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @cached_property
    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._adj[u]

    def vertices(self) -> range:
        return range(self.n)

    def incident_edges(self, v: int) -> list[Edge]:
        return sorted(edge_key(v, w) for w in self._adj[v])

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self._edges)}

    # -- derived graphs -----------------------------------------------------

    def without_vertices(self, vertices: Iterable[int]) -> Graph:
        """Delete the edges at ``vertices``; the ids remain, now isolated."""
        drop = set(vertices)
        return Graph(self.n, [e for e in self._edges if e[0] not in drop and e[1] not in drop])

    def components(self) -> list[list[int]]:
        """Connected components (isolated vertices included), sorted by min id."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, max_degree={self.max_degree})"


def build_graph(edges: Iterable[Sequence[int]], n: int | None = None) -> Graph:
    """Build a simple graph; ``n`` defaults to one more than the largest id."""
    edges = [tuple(e) for e in edges]
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph(n, edges)


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for root in range(g.n):
        if not g.neighbors(root):
            continue
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.neighbors(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def edge_two_neighborhood(g: Graph, e: Sequence[int]) -> set[Edge]:
    """Edges at line-graph distance 1 or 2 from ``e`` (``e`` excluded).

    These are exactly the edges with an endpoint in ``N(u) | N(v)``.
    """
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"unknown edge ({u}, {v})")
    out: set[Edge] = set()
    for x in g.neighbors(u) | g.neighbors(v):
        for y in g.neighbors(x):
            out.add(edge_key(x, y))
    out.discard(edge_key(u, v))
    return out


def two_vertex_min_distance(g: Graph) -> float:
    """Minimum distance between two distinct 2-vertices (``inf`` if fewer than two)."""
    twos = [v for v in g.vertices() if g.degree(v) == 2]
    targets = set(twos)
    best = math.inf
    for s in twos:
        dist = {s: 0}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if dist[x] >= best:
                break
            if x != s and x in targets:
                best = min(best, dist[x])
                break
            for y in g.neighbors(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
    return best


# ---------------------------------------------------------------------------
# Vertex taxonomy
# ---------------------------------------------------------------------------


class VertexKind(str, Enum):
    PLAIN = "plain"
    ONE = "1"
    TWO_WEAK = "2-weak"
    TWO_SEMIWEAK = "2-semiweak"
    TWO_STRONG = "2-strong"
    FOUR_2 = "4_2"
    FOUR_3 = "4_3"


@dataclass(frozen=True)
class VertexClass:
    kind: VertexKind
    degree: int

    @property
    def is_nonweak_two(self) -> bool:
        return self.kind in (VertexKind.TWO_SEMIWEAK, VertexKind.TWO_STRONG)


def _four_kind(g: Graph, v: int) -> VertexKind:
    twos = sum(1 for w in g.neighbors(v) if g.degree(w) == 2)
    if twos <= 2:
        return VertexKind.FOUR_2
    if twos == 3:
        return VertexKind.FOUR_3
    return VertexKind.PLAIN


def classify_vertex(g: Graph, v: int) -> VertexClass:
    d = g.degree(v)
    if d == 1:
        return VertexClass(VertexKind.ONE, 1)
    if d == 4:
        return VertexClass(_four_kind(g, v), 4)
    if d != 2:
        return VertexClass(VertexKind.PLAIN, d)
    nbrs = g.neighbors(v)
    if any(g.degree(w) <= 3 for w in nbrs):
        return VertexClass(VertexKind.TWO_WEAK, 2)
    if any(g.degree(w) == 4 and _four_kind(g, w) is VertexKind.FOUR_3 for w in nbrs):
        return VertexClass(VertexKind.TWO_SEMIWEAK, 2)
    return VertexClass(VertexKind.TWO_STRONG, 2)


# ---------------------------------------------------------------------------
# Plane embeddings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Face:
    """A boundary walk, stored as its cyclic dart sequence."""

    darts: tuple[Dart, ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def walk(self) -> tuple[int, ...]:
        """Vertices in boundary order (repeats possible for non-simple walks)."""
        return tuple(u for u, _ in self.darts)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.walk)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(edge_key(u, v) for u, v in self.darts)

    def is_simple_cycle(self) -> bool:
        return len(set(self.walk)) == len(self.darts) >= 3

    def incidences(self, v: int) -> int:
        """Number of times the walk passes through ``v``."""
        return sum(1 for u, _ in self.darts if u == v)


class PlaneEmbedding:
    """A graph together with a clockwise rotation at every vertex."""

    __slots__ = ("graph", "rotation", "__dict__")

    def __init__(self, graph: Graph, rotation: Sequence[Sequence[int]]) -> None:
        if len(rotation) != graph.n:
            raise GraphError(f"rotation covers {len(rotation)} vertices, graph has {graph.n}")
        rot = tuple(tuple(int(w) for w in r) for r in rotation)
        for v, r in enumerate(rot):
            if len(r) != len(set(r)) or set(r) != graph.neighbors(v):
                raise GraphError(f"rotation at {v} is not a permutation of its neighbors: {list(r)}")
        self.graph = graph
        self.rotation = rot

    @cached_property
    def _position(self) -> list[dict[int, int]]:
        return [{w: i for i, w in enumerate(r)} for r in self.rotation]

    def next_dart(self, dart: Dart) -> Dart:
        u, v = dart
        r = self.rotation[v]
        return (v, r[(self._position[v][u] + 1) % len(r)])

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return tuple(trace_faces(self))

    def without_vertices(self, vertices: Iterable[int]) -> PlaneEmbedding:
        drop = set(vertices)
        g = self.graph.without_vertices(drop)
        rot = [() if v in drop else tuple(w for w in r if w not in drop) for v, r in enumerate(self.rotation)]
        return PlaneEmbedding(g, rot)

    def euler_ok(self) -> bool:
        """Every non-trivial component satisfies ``n - m + f = 2``."""
        comp_of = {}
        for i, comp in enumerate(self.graph.components()):
            for v in comp:
                comp_of[v] = i
        counts: dict[int, list[int]] = {}
        for v in self.graph.vertices():
            if self.graph.degree(v):
                counts.setdefault(comp_of[v], [0, 0, 0])[0] += 1
        for u, v in self.graph.edges:
            counts[comp_of[u]][1] += 1
        for f in self.faces:
            counts[comp_of[f.darts[0][0]]][2] += 1
        return all(n - m + f == 2 for n, m, f in counts.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneEmbedding):
            return NotImplemented
        return self.graph == other.graph and self.rotation == other.rotation

    def __hash__(self) -> int:
        return hash((self.graph, self.rotation))

    def __repr__(self) -> str:
        return f"PlaneEmbedding({self.graph!r}, faces={len(self.faces)})"


def trace_faces(emb: PlaneEmbedding) -> list[Face]:
    """Partition the ``2m`` darts into boundary walks.

    Each face starts at its smallest dart, and faces are listed by that dart.
    """
    g = emb.graph
    used: set[Dart] = set()
    faces = []
    darts = sorted((u, v) for u in g.vertices() for v in g.neighbors(u))
    for start in darts:
        if start in used:
            continue
        walk = []
        d = start
        while d not in used:
            used.add(d)
            walk.append(d)
            d = emb.next_dart(d)
        if d != start:
            raise GraphError(f"malformed rotation: walk from {start} re-entered at {d}")
        faces.append(Face(tuple(walk)))
    return faces


def faces_at(emb: PlaneEmbedding, v: int) -> Iterator[Face]:
    for f in emb.faces:
        if v in f.vertices:
            yield f
