"""Exact strong chromatic index by backtracking on the conflict graph.

The search is DSATUR-flavoured: the uncolored edge with the most distinct
forbidden colors goes next (ties by smallest edge id), a color may be reused
or the next unused color may be opened, and nothing else. That last rule
removes color permutations, so "infeasible" answers are complete.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .coloring import StrongColoring, conflict_graph
from .graph import Graph


class BudgetExhausted(RuntimeError):
    """The node or time budget ran out before the question was settled."""

    def __init__(self, message: str, nodes: int) -> None:
        super().__init__(message)
        self.nodes = nodes


@dataclass
class SolverConfig:
    max_colors: int = 64
    node_limit: int | None = None
    time_limit: float | None = None
    deterministic: bool = True
    workers: int = 1
    split_depth: int = 3

    def __post_init__(self) -> None:
        if self.max_colors < 1:
            raise ValueError("max_colors must be at least 1")


@dataclass
class SearchStats:
    nodes: int = 0
    seconds: float = 0.0


@dataclass
class SolveResult:
    index: int
    witness: StrongColoring
    stats: SearchStats
    # palette sizes proven infeasible on the way up
    certified_infeasible: list[int] = field(default_factory=list)


def clique_lower_bound(g: Graph) -> int:
    """``max d(u) + d(v) - 1`` over edges: the edges at ``u`` or ``v`` pairwise conflict."""
    return max((g.degree(u) + g.degree(v) - 1 for u, v in g.edges), default=0)


# ---------------------------------------------------------------------------
# Search core
# ---------------------------------------------------------------------------


class _Search:
    def __init__(
        self,
        nbrs: list[list[int]],
        k: int,
        node_limit: int | None,
        deadline: float | None,
    ) -> None:
        self.nbrs = nbrs
        self.n = len(nbrs)
        self.k = k
        self.full = (1 << k) - 1
        self.node_limit = node_limit
        self.deadline = deadline
        self.color = [-1] * self.n
        self.forb = [0] * self.n
        self.cnt = [[0] * k for _ in range(self.n)]
        self.nodes = 0
        self.used = 0

    def _assign(self, v: int, c: int) -> bool:
        """Color ``v``; return False if some uncolored neighbor is wiped out."""
        self.color[v] = c
        bit = 1 << c
        ok = True
        for u in self.nbrs[v]:
            row = self.cnt[u]
            row[c] += 1
            if row[c] == 1:
                self.forb[u] |= bit
                if self.color[u] < 0 and self.forb[u] == self.full:
                    ok = False
        return ok

    def _unassign(self, v: int) -> None:
        c = self.color[v]
        self.color[v] = -1
        bit = 1 << c
        for u in self.nbrs[v]:
            row = self.cnt[u]
            row[c] -= 1
            if row[c] == 0:
                self.forb[u] &= ~bit

    def _pick(self) -> int:
        best, best_sat = -1, -1
        color, forb = self.color, self.forb
        for v in range(self.n):
            if color[v] < 0:
                sat = forb[v].bit_count()
                if sat > best_sat:
                    best, best_sat = v, sat
        return best

    def _candidates(self, v: int) -> list[int]:
        forb = self.forb[v]
        return [c for c in range(min(self.used + 1, self.k)) if not forb >> c & 1]

    def _tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExhausted(f"node limit {self.node_limit} exceeded", self.nodes)
        if self.deadline is not None and self.nodes & 1023 == 1 and time.monotonic() > self.deadline:
            raise BudgetExhausted("time limit exceeded", self.nodes)

    def replay(self, prefix: list[tuple[int, int]]) -> bool:
        for v, c in prefix:
            if not self._assign(v, c):
                return False
            self.used = max(self.used, c + 1)
        return True

    def solve(self, remaining: int) -> bool:
        if remaining == 0:
            return True
        self._tick()
        v = self._pick()
        saved = self.used
        for c in self._candidates(v):
            if c == self.used:
                self.used += 1
            if self._assign(v, c) and self.solve(remaining - 1):
                return True
            self._unassign(v)
            self.used = saved
        return False

    def frontier(self, depth: int) -> list[list[tuple[int, int]]]:
        """Decision prefixes of length ``depth`` (or complete) in DFS order."""
        out: list[list[tuple[int, int]]] = []
        path: list[tuple[int, int]] = []

        def rec(remaining: int, d: int) -> None:
            if d == 0 or remaining == 0:
                out.append(list(path))
                return
            v = self._pick()
            saved = self.used
            for c in self._candidates(v):
                if c == self.used:
                    self.used += 1
                if self._assign(v, c):
                    path.append((v, c))
                    rec(remaining - 1, d - 1)
                    path.pop()
                self._unassign(v)
                self.used = saved

        rec(self.n, depth)
        return out


def _solve_prefix(args: tuple) -> tuple[list[int] | None, int]:
    nbrs, k, prefix, node_limit, deadline = args
    s = _Search(nbrs, k, node_limit, deadline)
    if not s.replay(prefix):
        return None, s.nodes
    if s.solve(s.n - len(prefix)):
        return s.color, s.nodes
    return None, s.nodes


def _to_coloring(g: Graph, colors: list[int], k: int) -> StrongColoring:
    return StrongColoring({e: colors[i] for i, e in enumerate(g.edges)}, k)


def is_k_strong_colorable(
    g: Graph,
    k: int,
    cfg: SolverConfig | None = None,
    stats: SearchStats | None = None,
) -> StrongColoring | None:
    """A strong ``k``-coloring, or ``None`` when the complete search finds none.

    Raises :class:`BudgetExhausted` if the budget in ``cfg`` runs out first.
    """
    if k < 1:
        raise ValueError("k must be positive")
    cfg = cfg or SolverConfig()
    stats = stats if stats is not None else SearchStats()
    t0 = time.monotonic()
    deadline = t0 + cfg.time_limit if cfg.time_limit is not None else None
    cg = conflict_graph(g)
    nbrs = [sorted(a) for a in cg.adjacency]
    try:
        if g.m == 0:
            return StrongColoring({}, k)
        if cfg.workers > 1:
            return _parallel(g, nbrs, k, cfg, deadline, stats)
        s = _Search(nbrs, k, cfg.node_limit, deadline)
        try:
            found = s.solve(s.n)
        finally:
            stats.nodes += s.nodes
        return _to_coloring(g, s.color, k) if found else None
    finally:
        stats.seconds += time.monotonic() - t0


def _parallel(
    g: Graph,
    nbrs: list[list[int]],
    k: int,
    cfg: SolverConfig,
    deadline: float | None,
    stats: SearchStats,
) -> StrongColoring | None:
    # Prefixes come out in DFS order and the first feasible one wins, so the
    # witness is the one the sequential search would have returned.
    prefixes = _Search(nbrs, k, None, None).frontier(cfg.split_depth)
    jobs = [(nbrs, k, p, cfg.node_limit, deadline) for p in prefixes]
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        results = list(pool.map(_solve_prefix, jobs))
    stats.nodes += sum(n for _, n in results)
    for colors, _ in results:
        if colors is not None:
            return _to_coloring(g, colors, k)
    return None


def strong_chromatic_index(g: Graph, cfg: SolverConfig | None = None) -> SolveResult:
    """Smallest feasible palette, searched upward from :func:`clique_lower_bound`."""
    if g.m == 0:
        raise ValueError("graph has no edges")
    cfg = cfg or SolverConfig()
    stats = SearchStats()
    proven = []
    deadline = time.monotonic() + cfg.time_limit if cfg.time_limit is not None else None
    for k in range(max(1, clique_lower_bound(g)), min(cfg.max_colors, g.m) + 1):
        budget = None if deadline is None else max(0.0, deadline - time.monotonic())
        step_cfg = SolverConfig(
            max_colors=cfg.max_colors,
            node_limit=None if cfg.node_limit is None else max(0, cfg.node_limit - stats.nodes),
            time_limit=budget,
            deterministic=cfg.deterministic,
            workers=cfg.workers,
            split_depth=cfg.split_depth,
        )
        witness = is_k_strong_colorable(g, k, step_cfg, stats)
        if witness is not None:
            return SolveResult(k, witness, stats, proven)
        proven.append(k)
    raise BudgetExhausted(f"no strong coloring with at most {cfg.max_colors} colors", stats.nodes)
