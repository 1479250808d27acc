"""Text formats for graphs (``secg 1``) and coloring certificates (``secc 1``).

Graph files::

    secg 1
    v 6
    e 0 2
    ...
    r 0: 2 3 4        # clockwise rotation, one line per vertex (optional)

Coloring files hold one ``u v color`` line per edge with 1-based colors, after
a ``secc 1`` header and an optional ``p <palette>`` line. ``#`` starts a
comment in both formats.
"""

from __future__ import annotations

from .coloring import StrongColoring
from .graph import Graph, GraphError, PlaneEmbedding, edge_key

GRAPH_TAG = "secg"
COLORING_TAG = "secc"
VERSION = "1"


class FormatError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(text: str):
    """Yield ``(line_no, [(column, token), ...])`` for non-blank, comment-stripped lines."""
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = []
        col = 0
        for part in body.split():
            col = body.index(part, col)
            toks.append((col + 1, part))
            col += len(part)
        if toks:
            yield no, toks


def _int(tok: tuple[int, str], line: int) -> int:
    col, s = tok
    try:
        return int(s)
    except ValueError:
        raise FormatError(f"expected an integer, got {s!r}", line, col) from None


def parse_graph_file(text: str) -> tuple[Graph, PlaneEmbedding | None]:
    lines = list(_tokens(text))
    if not lines:
        raise FormatError("empty input", 1)
    no, head = lines[0]
    if [t for _, t in head] != [GRAPH_TAG, VERSION]:
        raise FormatError(f"expected header '{GRAPH_TAG} {VERSION}'", no)
    n = None
    edges: list[tuple[int, int]] = []
    edge_line: dict[tuple[int, int], int] = {}
    rotation: dict[int, list[int]] = {}
    rot_line: dict[int, int] = {}
    for no, toks in lines[1:]:
        tag = toks[0][1]
        if tag == "v":
            if n is not None:
                raise FormatError("repeated 'v' line", no)
            if len(toks) != 2:
                raise FormatError("'v' takes one integer", no)
            n = _int(toks[1], no)
            if n < 0:
                raise FormatError("vertex count must be nonnegative", no, toks[1][0])
        elif tag == "e":
            if len(toks) != 3:
                raise FormatError("'e' takes two integers", no)
            u, w = _int(toks[1], no), _int(toks[2], no)
            key = edge_key(u, w)
            if u == w:
                raise FormatError(f"loop edge ({u}, {w})", no, toks[1][0])
            if key in edge_line:
                raise FormatError(f"duplicate edge {key} (first on line {edge_line[key]})", no, toks[1][0])
            edge_line[key] = no
            edges.append((u, w))
        elif tag == "r":
            if len(toks) < 2 or not toks[1][1].endswith(":"):
                raise FormatError("rotation lines look like 'r <v>: <n1> <n2> ...'", no)
            col, s = toks[1]
            v = _int((col, s[:-1]), no)
            if v in rotation:
                raise FormatError(f"second rotation line for vertex {v}", no, col)
            rotation[v] = [_int(t, no) for t in toks[2:]]
            rot_line[v] = no
        else:
            raise FormatError(f"unknown line tag {tag!r}", no, toks[0][0])
    if n is None:
        raise FormatError("missing 'v <n>' line", lines[0][0])
    if rotation and not edges:
        seen = set()
        for v, r in rotation.items():
            for w in r:
                key = edge_key(v, w)
                if key not in seen:
                    seen.add(key)
                    edges.append(key)
                    edge_line[key] = rot_line[v]
    try:
        g = Graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc), max(edge_line.values(), default=1)) from None
    if not rotation:
        return g, None
    missing = [v for v in g.vertices() if v not in rotation]
    if missing:
        raise FormatError(f"rotation lines missing for vertex {missing[0]}", lines[-1][0])
    for v, r in rotation.items():
        if not 0 <= v < n:
            raise FormatError(f"rotation for unknown vertex {v}", rot_line[v])
        bad = [w for w in r if not g.has_edge(v, w)]
        if bad:
            raise FormatError(f"rotation at {v} names non-neighbor {bad[0]}", rot_line[v])
        if len(r) != len(set(r)) or set(r) != g.neighbors(v):
            raise FormatError(f"rotation at {v} is not a permutation of its neighbors", rot_line[v])
    return g, PlaneEmbedding(g, [rotation[v] for v in range(n)])


def write_graph_file(g: Graph, emb: PlaneEmbedding | None = None) -> str:
    out = [f"{GRAPH_TAG} {VERSION}", f"v {g.n}"]
    out += [f"e {u} {w}" for u, w in g.edges]
    if emb is not None:
        out += [f"r {v}: {' '.join(map(str, r))}".rstrip() for v, r in enumerate(emb.rotation)]
    return "\n".join(out) + "\n"


def write_coloring_file(c: StrongColoring) -> str:
    out = [f"{COLORING_TAG} {VERSION}", f"p {c.palette_size}"]
    out += [f"{u} {w} {color + 1}" for (u, w), color in sorted(c.assignment.items())]
    return "\n".join(out) + "\n"


def parse_coloring_file(text: str) -> StrongColoring:
    lines = list(_tokens(text))
    if not lines:
        raise FormatError("empty input", 1)
    no, head = lines[0]
    if [t for _, t in head] != [COLORING_TAG, VERSION]:
        raise FormatError(f"expected header '{COLORING_TAG} {VERSION}'", no)
    palette = None
    assignment: dict[tuple[int, int], int] = {}
    for no, toks in lines[1:]:
        if toks[0][1] == "p":
            if len(toks) != 2:
                raise FormatError("'p' takes one integer", no)
            palette = _int(toks[1], no)
            continue
        if len(toks) != 3:
            raise FormatError("coloring lines look like '<u> <v> <color>'", no)
        u, w, color = (_int(t, no) for t in toks)
        if color < 1:
            raise FormatError("colors are 1-based in files", no, toks[2][0])
        key = edge_key(u, w)
        if key in assignment:
            raise FormatError(f"edge {key} colored twice", no)
        assignment[key] = color - 1
    if palette is None:
        palette = max(assignment.values(), default=0) + 1
    if assignment and max(assignment.values()) >= palette:
        raise FormatError(f"color {max(assignment.values()) + 1} exceeds palette {palette}", lines[-1][0])
    return StrongColoring(assignment, max(palette, 1))
