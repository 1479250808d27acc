"""Strong edge colorings: representation, verification and first-fit."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .graph import Edge, Graph, GraphError, edge_key, edge_two_neighborhood


class ColoringError(ValueError):
    """Raised for colorings that do not fit the graph or the palette."""


@dataclass
class StrongColoring:
    """Edge -> color map (0-based colors) over a fixed palette, possibly partial."""

    assignment: dict[Edge, int] = field(default_factory=dict)
    palette_size: int = 1

    def __post_init__(self) -> None:
        if self.palette_size < 1:
            raise ColoringError(f"palette size must be positive, got {self.palette_size}")
        self.assignment = {edge_key(*e): int(c) for e, c in self.assignment.items()}
        for e, c in self.assignment.items():
            if not 0 <= c < self.palette_size:
                raise ColoringError(f"color {c} on {e} outside palette of size {self.palette_size}")

    def __getitem__(self, e: Sequence[int]) -> int:
        return self.assignment[edge_key(*e)]

    def __contains__(self, e: object) -> bool:
        return isinstance(e, tuple) and edge_key(*e) in self.assignment

    def __len__(self) -> int:
        return len(self.assignment)

    def get(self, e: Sequence[int]) -> int | None:
        return self.assignment.get(edge_key(*e))

    def assign(self, e: Sequence[int], color: int) -> None:
        if not 0 <= color < self.palette_size:
            raise ColoringError(f"color {color} outside palette of size {self.palette_size}")
        self.assignment[edge_key(*e)] = color

    def unassign(self, e: Sequence[int]) -> None:
        self.assignment.pop(edge_key(*e), None)

    def colors(self) -> set[int]:
        return set(self.assignment.values())

    def num_colors(self) -> int:
        return len(self.colors())

    def is_total(self, g: Graph) -> bool:
        return all(e in self.assignment for e in g.edges)

    def copy(self) -> StrongColoring:
        return StrongColoring(dict(self.assignment), self.palette_size)

    def restricted(self, edges: Iterable[Edge]) -> StrongColoring:
        keep = {edge_key(*e) for e in edges}
        return StrongColoring({e: c for e, c in self.assignment.items() if e in keep}, self.palette_size)

    def with_palette(self, palette_size: int) -> StrongColoring:
        return StrongColoring(dict(self.assignment), palette_size)


@dataclass(frozen=True)
class Conflict:
    first: Edge
    second: Edge
    distance: int


@dataclass(frozen=True)
class Verdict:
    conflicts: tuple[Conflict, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.conflicts

    def __bool__(self) -> bool:
        return self.valid


def _edge_distance(e: Edge, f: Edge) -> int:
    return 1 if set(e) & set(f) else 2


def find_conflicts(g: Graph, c: StrongColoring) -> list[Conflict]:
    """All same-colored pairs at distance <= 2 among the colored edges of ``g``."""
    out = []
    for e in g.edges:
        ce = c.assignment.get(e)
        if ce is None:
            continue
        for f in edge_two_neighborhood(g, e):
            if f > e and c.assignment.get(f) == ce:
                out.append(Conflict(e, f, _edge_distance(e, f)))
    out.sort(key=lambda x: (x.first, x.second))
    return out


def verify_strong(g: Graph, c: StrongColoring) -> Verdict:
    """Check a total coloring; report every conflicting pair with its distance."""
    missing = [e for e in g.edges if e not in c.assignment]
    if missing:
        raise ColoringError(f"partial coloring: {len(missing)} edge(s) uncolored, first {missing[0]}")
    extra = [e for e in c.assignment if not g.has_edge(*e)]
    if extra:
        raise ColoringError(f"coloring names non-edge {extra[0]}")
    return Verdict(tuple(find_conflicts(g, c)))


# ---------------------------------------------------------------------------
# Conflict graph (square of the line graph)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConflictGraph:
    nodes: tuple[Edge, ...]
    adjacency: tuple[frozenset[int], ...]

    @property
    def links(self) -> set[frozenset[Edge]]:
        return {frozenset((self.nodes[i], self.nodes[j])) for i, nb in enumerate(self.adjacency) for j in nb}

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def is_complete(self) -> bool:
        k = len(self.nodes)
        return all(len(nb) == k - 1 for nb in self.adjacency)

    def masks(self) -> list[int]:
        return [sum(1 << j for j in nb) for nb in self.adjacency]


def conflict_graph(g: Graph) -> ConflictGraph:
    index = g.edge_index
    adjacency = tuple(frozenset(index[f] for f in edge_two_neighborhood(g, e)) for e in g.edges)
    return ConflictGraph(g.edges, adjacency)


# ---------------------------------------------------------------------------
# Free colors and first-fit
# ---------------------------------------------------------------------------


def blocked_colors(g: Graph, c: Mapping[Edge, int] | StrongColoring, e: Sequence[int]) -> set[int]:
    assignment = c.assignment if isinstance(c, StrongColoring) else c
    return {assignment[f] for f in edge_two_neighborhood(g, e) if f in assignment}


def free_colors(g: Graph, c: StrongColoring, e: Sequence[int]) -> set[int]:
    key = edge_key(*e)
    if key in c.assignment:
        raise ColoringError(f"edge {key} is already colored")
    return set(range(c.palette_size)) - blocked_colors(g, c, key)


@dataclass(frozen=True)
class GreedyFailure:
    """First-fit ran out of colors at ``blocking_edge``; ``partial`` is what it had."""

    blocking_edge: Edge
    partial: StrongColoring

    def __bool__(self) -> bool:
        return False


def color_greedy(
    g: Graph,
    order: Iterable[Sequence[int]] | None,
    palette_size: int,
    initial: StrongColoring | None = None,
) -> StrongColoring | GreedyFailure:
    """First-fit along ``order`` (all edges by id when ``None``).

    Edges already colored in ``initial`` are kept. A failure is returned, not
    raised, so callers can look at the blocking edge.
    """
    c = initial.with_palette(palette_size) if initial is not None else StrongColoring({}, palette_size)
    order = g.edges if order is None else [edge_key(*e) for e in order]
    for e in order:
        if not g.has_edge(*e):
            raise GraphError(f"unknown edge {e}")
        if e in c.assignment:
            continue
        blocked = blocked_colors(g, c, e)
        color = next((x for x in range(palette_size) if x not in blocked), None)
        if color is None:
            return GreedyFailure(e, c)
        c.assignment[e] = color
    return c
