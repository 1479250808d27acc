"""Constructive strong edge coloring by repeated reduction.

Both algorithms peel off a reducible configuration, color what is left, and
extend the coloring back over the removed edges:

* :func:`color_girth6` - palette ``3*Delta + 6`` for plane graphs of girth at
  least 6 with ``Delta >= 4`` (configurations K1-K6);
* :func:`color_subcubic_girth6` - palette 9 for subcubic plane graphs of girth
  at least 6 (configurations S1-S5).

The palette is fixed from the input's maximum degree and never shrinks while
the graph does. Every result is checked with :func:`verify_strong` before it is
returned.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Sequence

from .coloring import StrongColoring, blocked_colors, verify_strong
from .graph import Edge, Face, Graph, PlaneEmbedding, VertexKind, classify_vertex, edge_key, girth


class PreconditionError(ValueError):
    pass


class ReductionError(RuntimeError):
    """Carries a serialized instance so a failing graph is never lost."""

    def __init__(self, message: str, emb: PlaneEmbedding | None = None) -> None:
        self.dump = None
        if emb is not None:
            from .io import write_graph_file

            self.dump = write_graph_file(emb.graph, emb)
            message = f"{message}\n--- instance ---\n{self.dump}"
        super().__init__(message)


class IrreducibleGraph(ReductionError):
    """No configuration applies; the unavoidability argument says this cannot happen."""


class NoCompletion(ReductionError):
    """A local extension step that should always succeed found no coloring."""


class ConfigKind(str, Enum):
    K1 = "K1"
    K2 = "K2"
    K3 = "K3"
    K4 = "K4"
    K5 = "K5"
    K6 = "K6"
    S1 = "S1"
    S2 = "S2"
    S3 = "S3"
    S4 = "S4"
    S5 = "S5"


GREEDY = "greedy"
SIX_FACE_REPAIR = "six_face_repair"
SEVEN_FACE_ORDERED = "seven_face_ordered"


@dataclass(frozen=True)
class Configuration:
    kind: ConfigKind
    witness: tuple[int, ...]
    removal_set: tuple[int, ...]
    extension_plan: tuple[Edge, ...]
    strategy: str = GREEDY
    face: Face | None = None


@dataclass
class ExtensionRecord:
    kind: ConfigKind
    edge: Edge
    free_before_extension: int
    free_when_colored: int


@dataclass
class ReductionTrace:
    kinds: Counter = field(default_factory=Counter)
    extensions: list[ExtensionRecord] = field(default_factory=list)
    six_face_direct: int = 0
    six_face_recolored: int = 0
    seven_face_lookahead: int = 0
    seven_face_fallback: int = 0
    base_cases: int = 0


# ---------------------------------------------------------------------------
# Configuration detection
# ---------------------------------------------------------------------------


def _two_minus(g: Graph, v: int) -> list[int]:
    return sorted(w for w in g.neighbors(v) if g.degree(w) <= 2)


def _other(g: Graph, u: int, v: int) -> int:
    """The neighbor of 2-vertex ``u`` that is not ``v``."""
    (w,) = g.neighbors(u) - {v}
    return w


def _k1(g: Graph) -> Configuration | None:
    for v in g.vertices():
        if g.degree(v) == 1:
            (u,) = g.neighbors(v)
            if g.degree(u) <= 4:
                return Configuration(ConfigKind.K1, (v, u), (v,), (edge_key(u, v),))
    return None


def _k2(g: Graph) -> Configuration | None:
    for v in g.vertices():
        if g.degree(v) == 1:
            (u,) = g.neighbors(v)
            if g.degree(u) == 5 and len(_two_minus(g, u)) >= 2:
                return Configuration(ConfigKind.K2, (v, u), (v,), (edge_key(u, v),))
    return None


def _k3(g: Graph) -> Configuration | None:
    for v in g.vertices():
        if g.degree(v) == 2:
            u, w = sorted(g.neighbors(v))
            if g.degree(u) <= 4 and g.degree(w) <= 4:
                return Configuration(ConfigKind.K3, (v, u, w), (v,), (edge_key(u, v), edge_key(v, w)))
    return None


def _k4(g: Graph) -> Configuration | None:
    for v in g.vertices():
        if g.degree(v) and all(g.degree(w) <= 2 for w in g.neighbors(v)):
            plan = tuple(edge_key(v, w) for w in sorted(g.neighbors(v)))
            return Configuration(ConfigKind.K4, (v,), (v,), plan)
    return None


def _is_strong_two(g: Graph, u: int) -> bool:
    return g.degree(u) == 2 and classify_vertex(g, u).kind is VertexKind.TWO_STRONG


def _k5(g: Graph) -> Configuration | None:
    # A 1-neighbor counts as non-strong here, as in the charge count for 6+-vertices.
    for v in g.vertices():
        k = g.degree(v)
        if k < 5:
            continue
        small = _two_minus(g, v)
        if len(small) < k - 1:
            continue
        for u in small:
            if not _is_strong_two(g, u):
                plan = [edge_key(u, v)]
                if g.degree(u) == 2:
                    plan.append(edge_key(u, _other(g, u, v)))
                return Configuration(ConfigKind.K5, (v, u), (u,), tuple(plan))
    return None


def _k6(g: Graph) -> Configuration | None:
    for v in g.vertices():
        k = g.degree(v)
        if k < 5:
            continue
        small = _two_minus(g, v)
        if len(small) != k - 2:
            continue
        nonweak = [u for u in small if classify_vertex(g, u).is_nonweak_two]
        if len(nonweak) > 2:
            continue
        removed = tuple(u for u in small if u not in nonweak)
        plan = [edge_key(v, u) for u in removed]
        plan += [edge_key(u, _other(g, u, v)) for u in removed if g.degree(u) == 2]
        return Configuration(ConfigKind.K6, (v, *removed), removed, tuple(plan))
    return None


_GENERAL_DETECTORS = (_k1, _k2, _k3, _k4, _k5, _k6)


def find_config_general(g: Graph, emb: PlaneEmbedding | None = None) -> Configuration | None:
    """First of K1..K6 that applies, at its smallest witness vertex."""
    for detect in _GENERAL_DETECTORS:
        found = detect(g)
        if found is not None:
            return found
    return None


def _s1(g: Graph, emb: PlaneEmbedding) -> Configuration | None:
    for v in g.vertices():
        if g.degree(v) == 1:
            (u,) = g.neighbors(v)
            return Configuration(ConfigKind.S1, (v, u), (v,), (edge_key(u, v),))
    return None


def _s2(g: Graph, emb: PlaneEmbedding) -> Configuration | None:
    for v in g.vertices():
        if g.degree(v) != 2:
            continue
        for u in sorted(g.neighbors(v)):
            if g.degree(u) == 2:
                w = _other(g, v, u)
                return Configuration(ConfigKind.S2, (u, v, w), (v,), (edge_key(v, w), edge_key(u, v)))
    return None


def _s3(g: Graph, emb: PlaneEmbedding) -> Configuration | None:
    for v in g.vertices():
        if g.degree(v) != 3:
            continue
        twos = sorted(w for w in g.neighbors(v) if g.degree(w) == 2)
        if len(twos) >= 2:
            u, w = twos[0], twos[1]
            z = _other(g, w, v)
            return Configuration(ConfigKind.S3, (v, u, w, z), (w,), (edge_key(w, z), edge_key(v, w)))
    return None


def _rotate_to(face: Face, v: int) -> tuple[int, ...]:
    walk = face.walk
    i = walk.index(v)
    return walk[i:] + walk[:i]


def _s4(g: Graph, emb: PlaneEmbedding) -> Configuration | None:
    twos = {v for v in g.vertices() if g.degree(v) == 2}
    best = None
    for f in emb.faces:
        if f.length != 6 or not f.is_simple_cycle():
            continue
        hit = sorted(twos & f.vertices)
        if hit and (best is None or hit[0] < best[0]):
            best = (hit[0], f)
    if best is None:
        return None
    v0, f = best
    cyc = _rotate_to(f, v0)
    plan = (edge_key(v0, cyc[5]), edge_key(v0, cyc[1]))
    return Configuration(ConfigKind.S4, cyc, (v0,), plan, SIX_FACE_REPAIR, f)


def seven_face_labels(g: Graph, face: Face) -> dict[str, int] | None:
    """Label a 7-face as v1..v7 with its 2-vertices at v2 and v5, plus u3, u4.

    Returns ``None`` unless the face is a 7-cycle whose two 2-vertices are three
    steps apart with 3-vertices v3, v4 between them.
    """
    if face.length != 7 or not face.is_simple_cycle():
        return None
    walk = face.walk
    twos = [i for i, x in enumerate(walk) if g.degree(x) == 2]
    if len(twos) != 2:
        return None
    for a in twos:
        b = (a + 3) % 7
        if b not in twos:
            continue
        lab = {f"v{j + 2}": walk[(a + j) % 7] for j in range(6)}
        lab["v1"] = walk[(a + 6) % 7]
        v3, v4 = lab["v3"], lab["v4"]
        if g.degree(v3) != 3 or g.degree(v4) != 3:
            return None
        (lab["u3"],) = g.neighbors(v3) - {lab["v2"], v4}
        (lab["u4"],) = g.neighbors(v4) - {v3, lab["v5"]}
        return lab
    return None


def seven_face_edges(lab: dict[str, int]) -> list[Edge]:
    """The seven edges in the extension order: v4u4, v3v4, v3u3, v5v6, v4v5, v2v3, v1v2."""
    pairs = [("v4", "u4"), ("v3", "v4"), ("v3", "u3"), ("v5", "v6"), ("v4", "v5"), ("v2", "v3"), ("v1", "v2")]
    return [edge_key(lab[a], lab[b]) for a, b in pairs]


def _s5(g: Graph, emb: PlaneEmbedding) -> Configuration | None:
    best = None
    for f in emb.faces:
        lab = seven_face_labels(g, f)
        if lab is None:
            continue
        key = min(lab["v2"], lab["v5"])
        if best is None or key < best[0]:
            best = (key, f, lab)
    if best is None:
        return None
    _, f, lab = best
    witness = tuple(lab[f"v{j}"] for j in range(1, 8)) + (lab["u3"], lab["u4"])
    removal = tuple(lab[x] for x in ("v2", "v3", "v4", "v5"))
    return Configuration(ConfigKind.S5, witness, removal, tuple(seven_face_edges(lab)), SEVEN_FACE_ORDERED, f)


_SUBCUBIC_DETECTORS = (_s1, _s2, _s3, _s4, _s5)


def find_config_subcubic(g: Graph, emb: PlaneEmbedding) -> Configuration | None:
    """First of S1..S5 that applies, with a smallest-vertex tie-break."""
    if g.max_degree > 3:
        raise PreconditionError(f"subcubic detector needs max degree <= 3, got {g.max_degree}")
    for detect in _SUBCUBIC_DETECTORS:
        found = detect(g, emb)
        if found is not None:
            return found
    return None


# ---------------------------------------------------------------------------
# Extension steps
# ---------------------------------------------------------------------------


def _free(g: Graph, c: StrongColoring, e: Edge) -> list[int]:
    blocked = blocked_colors(g, c, e)
    return [x for x in range(c.palette_size) if x not in blocked]


def _extend_greedy(
    g: Graph, emb: PlaneEmbedding, c: StrongColoring, cfg: Configuration, trace: ReductionTrace
) -> StrongColoring:
    initial = {e: len(_free(g, c, e)) for e in cfg.extension_plan}
    for e in cfg.extension_plan:
        free = _free(g, c, e)
        trace.extensions.append(ExtensionRecord(cfg.kind, e, initial[e], len(free)))
        if not free:
            raise NoCompletion(f"{cfg.kind.value}: no free color for {e}", emb)
        c.assignment[e] = free[0]
    return c


def _complete_locally(g: Graph, c: StrongColoring, edges: Sequence[Edge]) -> StrongColoring | None:
    """Backtrack over ``edges`` only, keeping every other color fixed.

    Current colors are tried first so that a completion changes as little as
    possible.
    """
    edges = list(edges)
    previous = {e: c.assignment.get(e) for e in edges}
    work = c.copy()
    for e in edges:
        work.assignment.pop(e, None)

    def rec(i: int) -> bool:
        if i == len(edges):
            return True
        e = edges[i]
        free = _free(g, work, e)
        if previous[e] in free:
            free.remove(previous[e])
            free.insert(0, previous[e])
        for x in free:
            work.assignment[e] = x
            if rec(i + 1):
                return True
            del work.assignment[e]
        return False

    return work if rec(0) else None


def repair_six_face(
    g: Graph,
    emb: PlaneEmbedding,
    partial: StrongColoring,
    face: Face,
    v0: int,
    trace: ReductionTrace | None = None,
) -> StrongColoring:
    """Color the two edges at 2-vertex ``v0`` of a 6-face, recoloring face edges if needed.

    Only the six face edges may change. The direct attempt (``v0v5`` then
    ``v0v1`` with free colors) is tried first, then an exhaustive search over
    the face edges.
    """
    trace = trace if trace is not None else ReductionTrace()
    cyc = _rotate_to(face, v0)
    if len(cyc) != 6 or g.degree(v0) != 2:
        raise PreconditionError("repair_six_face needs a 2-vertex on a 6-face")
    first, second = edge_key(v0, cyc[5]), edge_key(v0, cyc[1])
    if first in partial.assignment or second in partial.assignment:
        raise PreconditionError("edges at v0 must be uncolored")
    c = partial.copy()
    for e in (first, second):
        free = _free(g, c, e)
        if not free:
            break
        c.assignment[e] = free[0]
    else:
        trace.six_face_direct += 1
        return c
    ring = [first, second] + [edge_key(cyc[i], cyc[i + 1]) for i in range(1, 5)]
    done = _complete_locally(g, partial, ring)
    if done is None:
        raise NoCompletion(f"6-face at {v0}: no recoloring of the face edges works", emb)
    trace.six_face_recolored += 1
    return done


def extend_seven_face(
    g: Graph,
    emb: PlaneEmbedding,
    partial: StrongColoring,
    face: Face,
    trace: ReductionTrace | None = None,
) -> StrongColoring:
    """Color the seven uncolored edges around a 7-face with two 2-vertices.

    Order: ``v4u4``; then ``v3v4`` with a color that keeps three colors free
    at ``v1v2`` where possible; then ``v3u3, v5v6, v4v5, v2v3, v1v2`` first-fit.
    A dead end falls back to exhaustive search over the seven edges.
    """
    trace = trace if trace is not None else ReductionTrace()
    lab = seven_face_labels(g, face)
    if lab is None:
        raise PreconditionError("face is not a 7-face with two 2-vertices three steps apart")
    edges = seven_face_edges(lab)
    if any(e in partial.assignment for e in edges):
        raise PreconditionError("the seven face edges must be uncolored")
    v4u4, v3v4, *rest = edges
    v1v2 = edges[-1]
    c = partial.copy()
    ok = False
    free = _free(g, c, v4u4)
    if free:
        c.assignment[v4u4] = free[0]
        target = set(_free(g, c, v1v2))
        # colors already unusable on v1v2 first
        options = sorted(_free(g, c, v3v4), key=lambda x: (x in target, x))
        if options and len(target - {options[0]}) >= 3:
            c.assignment[v3v4] = options[0]
            ok = True
            for e in rest:
                free = _free(g, c, e)
                if not free:
                    ok = False
                    break
                c.assignment[e] = free[0]
    if ok:
        trace.seven_face_lookahead += 1
        return c
    done = _complete_locally(g, partial, edges)
    if done is None:
        raise NoCompletion("7-face: no completion of the seven edges", emb)
    trace.seven_face_fallback += 1
    return done


def _extend(
    g: Graph, emb: PlaneEmbedding, c: StrongColoring, cfg: Configuration, trace: ReductionTrace
) -> StrongColoring:
    if cfg.strategy == SIX_FACE_REPAIR:
        for e in cfg.extension_plan:
            trace.extensions.append(ExtensionRecord(cfg.kind, e, len(_free(g, c, e)), -1))
        return repair_six_face(g, emb, c, cfg.face, cfg.witness[0], trace)
    if cfg.strategy == SEVEN_FACE_ORDERED:
        for e in cfg.extension_plan:
            trace.extensions.append(ExtensionRecord(cfg.kind, e, len(_free(g, c, e)), -1))
        return extend_seven_face(g, emb, c, cfg.face, trace)
    return _extend_greedy(g, emb, c, cfg, trace)


# ---------------------------------------------------------------------------
# Base cases and drivers
# ---------------------------------------------------------------------------


def _cycle_pattern(length: int) -> list[int]:
    if length % 3 == 0:
        return [0, 1, 2] * (length // 3)
    if length % 3 == 1:
        return [0, 1, 2, 3] + [0, 1, 2] * ((length - 4) // 3)
    if length == 5:
        return [0, 1, 2, 3, 4]
    return [0, 1, 2, 3] * 2 + [0, 1, 2] * ((length - 8) // 3)


def color_paths_and_cycles(g: Graph, palette_size: int) -> StrongColoring:
    """Strong coloring of a graph with max degree <= 2 using at most 5 colors."""
    if g.max_degree > 2:
        raise PreconditionError("base case needs max degree <= 2")
    c = StrongColoring({}, palette_size)
    for comp in g.components():
        if len(comp) < 2:
            continue
        ends = [v for v in comp if g.degree(v) == 1]
        start = ends[0] if ends else comp[0]
        walk = [start]
        prev = -1
        while True:
            nxt = [w for w in sorted(g.neighbors(walk[-1])) if w != prev]
            if not nxt or nxt[0] == start:
                break
            prev = walk[-1]
            walk.append(nxt[0])
        if ends:
            pattern = [i % 3 for i in range(len(walk) - 1)]
            pairs = list(zip(walk, walk[1:]))
        else:
            pattern = _cycle_pattern(len(walk))
            pairs = list(zip(walk, walk[1:] + walk[:1]))
        for (a, b), color in zip(pairs, pattern):
            c.assign((a, b), color)
    return c


def _run(
    emb: PlaneEmbedding,
    palette: int,
    finder: Callable[[Graph, PlaneEmbedding], Configuration | None],
    is_base: Callable[[Graph], bool],
    base: Callable[[Graph, PlaneEmbedding], StrongColoring],
    trace: ReductionTrace,
) -> StrongColoring:
    stack: list[tuple[Configuration, PlaneEmbedding]] = []
    cur = emb
    while not is_base(cur.graph):
        cfg = finder(cur.graph, cur)
        if cfg is None:
            raise IrreducibleGraph("no reducible configuration found", cur)
        if not cfg.removal_set:
            raise ReductionError(f"{cfg.kind.value} has an empty removal set", cur)
        trace.kinds[cfg.kind.value] += 1
        stack.append((cfg, cur))
        cur = cur.without_vertices(cfg.removal_set)
    c = base(cur.graph, cur).with_palette(palette)
    for cfg, level in reversed(stack):
        c = _extend(level.graph, level, c, cfg, trace)
    return c


def _check_embedding(g: Graph, emb: PlaneEmbedding) -> None:
    if emb.graph != g:
        raise PreconditionError("embedding does not belong to the graph")
    if not emb.euler_ok():
        raise PreconditionError("rotation system is not a plane embedding")


def _finish(g: Graph, c: StrongColoring, budget: int, emb: PlaneEmbedding) -> StrongColoring:
    verdict = verify_strong(g, c)
    if not verdict.valid:
        raise ReductionError(f"produced an invalid coloring: {verdict.conflicts[:3]}", emb)
    if c.num_colors() > budget:
        raise ReductionError(f"used {c.num_colors()} colors, budget {budget}", emb)
    return c


def color_subcubic_girth6(g: Graph, emb: PlaneEmbedding, trace: ReductionTrace | None = None) -> StrongColoring:
    """Strong coloring with at most 9 colors of a subcubic plane graph of girth >= 6."""
    trace = trace if trace is not None else ReductionTrace()
    _check_embedding(g, emb)
    if g.max_degree > 3:
        raise PreconditionError(f"max degree {g.max_degree} > 3")
    if girth(g) < 6:
        raise PreconditionError(f"girth {girth(g)} < 6")

    def base(h: Graph, h_emb: PlaneEmbedding) -> StrongColoring:
        trace.base_cases += 1
        return color_paths_and_cycles(h, 9)

    c = _run(emb, 9, find_config_subcubic, lambda h: h.max_degree <= 2, base, trace)
    return _finish(g, c, 9, emb)


def color_girth6(g: Graph, emb: PlaneEmbedding, trace: ReductionTrace | None = None) -> StrongColoring:
    """Strong coloring with at most ``3*Delta + 6`` colors, girth >= 6 and ``Delta >= 4``."""
    trace = trace if trace is not None else ReductionTrace()
    _check_embedding(g, emb)
    if g.max_degree < 4:
        raise PreconditionError(f"max degree {g.max_degree} < 4; use color_subcubic_girth6")
    if girth(g) < 6:
        raise PreconditionError(f"girth {girth(g)} < 6")
    palette = 3 * g.max_degree + 6

    def base(h: Graph, h_emb: PlaneEmbedding) -> StrongColoring:
        if h.m == 0:
            return StrongColoring({}, palette)
        return color_subcubic_girth6(h, h_emb, trace).with_palette(palette)

    c = _run(emb, palette, find_config_general, lambda h: h.max_degree <= 3, base, trace)
    return _finish(g, c, palette, emb)


@dataclass
class AutoResult:
    coloring: StrongColoring
    algorithm: str
    budget: int
    colors_used: int
    trace: ReductionTrace


def color_auto(g: Graph, emb: PlaneEmbedding) -> AutoResult:
    """Dispatch on max degree: subcubic (budget 9) or general (budget ``3*Delta + 6``)."""
    gi = girth(g)
    if gi < 6:
        raise PreconditionError(f"girth {gi} < 6: use the exact solver or the greedy baseline")
    trace = ReductionTrace()
    if g.max_degree <= 3:
        c = color_subcubic_girth6(g, emb, trace)
        return AutoResult(c, "subcubic", 9, c.num_colors(), trace)
    c = color_girth6(g, emb, trace)
    return AutoResult(c, "girth6", 3 * g.max_degree + 6, c.num_colors(), trace)


def budget_for(g: Graph) -> int:
    return 9 if g.max_degree <= 3 else 3 * g.max_degree + 6


__all__ = [
    "AutoResult",
    "ConfigKind",
    "Configuration",
    "IrreducibleGraph",
    "NoCompletion",
    "PreconditionError",
    "ReductionError",
    "ReductionTrace",
    "budget_for",
    "color_auto",
    "color_girth6",
    "color_paths_and_cycles",
    "color_subcubic_girth6",
    "extend_seven_face",
    "find_config_general",
    "find_config_subcubic",
    "repair_six_face",
    "seven_face_edges",
    "seven_face_labels",
]
