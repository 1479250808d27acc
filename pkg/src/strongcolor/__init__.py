"""Strong edge coloring of plane graphs: exact search, reduction colorers, discharging audits."""

from __future__ import annotations

__version__ = "0.1.0"

from .coloring import StrongColoring, conflict_graph, find_conflicts, verify_strong
from .constructions import CkdSpec, evaluate_bounds, gen_ckd, gen_hex_patch, gen_prism, subdivide
from .discharging import audit, discharge_general, discharge_subcubic, initial_charges
from .exact import BudgetExhausted, SolverConfig, is_k_strong_colorable, strong_chromatic_index
from .graph import Graph, PlaneEmbedding, build_graph, girth, trace_faces
from .reduction import color_auto, color_girth6, color_subcubic_girth6, find_config_general, find_config_subcubic

__all__ = [
    "BudgetExhausted",
    "CkdSpec",
    "Graph",
    "PlaneEmbedding",
    "SolverConfig",
    "StrongColoring",
    "audit",
    "build_graph",
    "color_auto",
    "color_girth6",
    "color_subcubic_girth6",
    "conflict_graph",
    "discharge_general",
    "discharge_subcubic",
    "evaluate_bounds",
    "find_config_general",
    "find_config_subcubic",
    "find_conflicts",
    "gen_ckd",
    "gen_hex_patch",
    "gen_prism",
    "girth",
    "initial_charges",
    "is_k_strong_colorable",
    "strong_chromatic_index",
    "subdivide",
    "trace_faces",
    "verify_strong",
]
