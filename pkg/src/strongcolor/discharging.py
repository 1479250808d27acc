"""Charge ledgers for the two discharging arguments.

Vertices start at ``2 d(v) - 6`` and faces at ``l(f) - 6``; on a connected
plane graph these sum to -12. Rules move charge along incidences and
adjacencies, one transfer per pair, and every amount is an exact
:class:`~fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Face, Graph, PlaneEmbedding, VertexKind, classify_vertex, girth
from .reduction import Configuration, find_config_general, find_config_subcubic

GENERAL = "general"
SUBCUBIC = "subcubic"

# (kind, id): kind is "v" for a vertex, "f" for a face index into ledger.faces
Obj = tuple[str, int]


class DischargeError(ValueError):
    pass


@dataclass(frozen=True)
class Transfer:
    source: Obj
    target: Obj
    amount: Fraction
    rule: str


@dataclass
class ChargeLedger:
    faces: tuple[Face, ...]
    vertex_charge: dict[int, Fraction]
    face_charge: dict[int, Fraction]
    transfers: list[Transfer] = field(default_factory=list)

    def total(self) -> Fraction:
        return sum(self.vertex_charge.values(), Fraction(0)) + sum(self.face_charge.values(), Fraction(0))

    def charge(self, obj: Obj) -> Fraction:
        kind, i = obj
        return self.vertex_charge[i] if kind == "v" else self.face_charge[i]

    def send(self, source: Obj, target: Obj, amount: Fraction, rule: str) -> None:
        for kind, i, delta in ((*source, -amount), (*target, amount)):
            book = self.vertex_charge if kind == "v" else self.face_charge
            book[i] += delta
        self.transfers.append(Transfer(source, target, amount, rule))

    def negatives(self) -> list[tuple[Obj, Fraction]]:
        out: list[tuple[Obj, Fraction]] = [(("v", v), c) for v, c in self.vertex_charge.items() if c < 0]
        out += [(("f", i), c) for i, c in self.face_charge.items() if c < 0]
        return out

    def copy(self) -> ChargeLedger:
        return ChargeLedger(self.faces, dict(self.vertex_charge), dict(self.face_charge), list(self.transfers))


def initial_charges(g: Graph, emb: PlaneEmbedding) -> ChargeLedger:
    if emb.graph != g:
        raise DischargeError("embedding does not belong to the graph")
    if g.m == 0 or not g.is_connected():
        raise DischargeError("discharging needs a connected graph with at least one edge")
    faces = emb.faces
    return ChargeLedger(
        faces,
        {v: Fraction(2 * g.degree(v) - 6) for v in g.vertices()},
        {i: Fraction(f.length - 6) for i, f in enumerate(faces)},
    )


_GENERAL_AMOUNTS = {
    VertexKind.ONE: (Fraction(2), "R2"),
    VertexKind.TWO_WEAK: (Fraction(2), "R3"),
    VertexKind.TWO_SEMIWEAK: (Fraction(4, 3), "R4"),
    VertexKind.TWO_STRONG: (Fraction(1), "R5"),
}


def discharge_general(g: Graph, emb: PlaneEmbedding) -> ChargeLedger:
    """Apply R1-R7 once each, per incidence or adjacency."""
    ledger = initial_charges(g, emb)
    classes = {v: classify_vertex(g, v) for v in g.vertices()}
    for i, f in enumerate(ledger.faces):
        for v in sorted(f.vertices):
            if g.degree(v) == 1:
                for _ in range(f.incidences(v)):
                    ledger.send(("f", i), ("v", v), Fraction(2), "R1")
    for v in g.vertices():
        cls = classes[v]
        for w in sorted(g.neighbors(v)):
            target = classes[w].kind
            if cls.degree >= 5 and target in _GENERAL_AMOUNTS:
                amount, rule = _GENERAL_AMOUNTS[target]
                ledger.send(("v", v), ("v", w), amount, rule)
            elif cls.kind is VertexKind.FOUR_2 and g.degree(w) == 2:
                ledger.send(("v", v), ("v", w), Fraction(1), "R6")
            elif cls.kind is VertexKind.FOUR_3 and g.degree(w) == 2:
                ledger.send(("v", v), ("v", w), Fraction(2, 3), "R7")
    return ledger


def discharge_subcubic(g: Graph, emb: PlaneEmbedding) -> ChargeLedger:
    """Every face sends 1 to every incident 2-vertex, once per incidence."""
    if g.max_degree > 3:
        raise DischargeError(f"subcubic discharging needs max degree <= 3, got {g.max_degree}")
    ledger = initial_charges(g, emb)
    for i, f in enumerate(ledger.faces):
        for v in sorted(f.vertices):
            if g.degree(v) == 2:
                for _ in range(f.incidences(v)):
                    ledger.send(("f", i), ("v", v), Fraction(1), "R")
    return ledger


def discharge(g: Graph, emb: PlaneEmbedding, mode: str) -> ChargeLedger:
    if mode == GENERAL:
        return discharge_general(g, emb)
    if mode == SUBCUBIC:
        return discharge_subcubic(g, emb)
    raise DischargeError(f"unknown mode {mode!r}")


@dataclass
class AuditReport:
    mode: str
    initial_total: Fraction
    final_total: Fraction
    negatives: list[tuple[Obj, Fraction]]
    configuration: Configuration | None
    ledger: ChargeLedger

    @property
    def conserved(self) -> bool:
        return self.initial_total == self.final_total == -12

    @property
    def contradiction(self) -> bool:
        """No negative object and no reducible configuration: the argument would be broken."""
        return not self.negatives and self.configuration is None

    @property
    def ok(self) -> bool:
        return self.conserved and not self.contradiction


def audit(g: Graph, emb: PlaneEmbedding, mode: str) -> AuditReport:
    """Discharge, then cross-check negative objects against configuration detection."""
    gi = girth(g)
    if gi < 6:
        raise DischargeError(f"audit needs girth >= 6, got {gi}")
    initial = initial_charges(g, emb).total()
    ledger = discharge(g, emb, mode)
    config = find_config_general(g, emb) if mode == GENERAL else find_config_subcubic(g, emb)
    return AuditReport(mode, initial, ledger.total(), ledger.negatives(), config, ledger)


def face_one_vertices(g: Graph, f: Face) -> int:
    return sum(f.incidences(v) for v in f.vertices if g.degree(v) == 1)
