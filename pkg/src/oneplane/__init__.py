"""Spanning plane subgraphs of 1-plane graphs: drawings, constructions, exact search."""

from .core import (
    CrossingPair,
    DisconnectedError,
    InvalidDrawingError,
    OnePlaneDrawing,
    OnePlaneError,
    RotationMultigraph,
    genus,
    is_plane_subset,
    planarize,
    trace_faces,
    validate,
    validate_drawing,
)
from .fileio import dump, dumps, load, loads, save
from .gadgets import Gadget, gadget
from .library import base_graph
from .constructions import (
    attach_gadgets,
    crossing_operation,
    gen_sevenreg,
    gen_theorem2,
    gen_theorem2_general,
    gen_theorem3,
    gen_theorem4,
    inflate,
)
from .connalg import connectivity, edge_connectivity, vertex_connectivity
from .solver import Budget, SolveReport, exact_search, exchange_heuristic
from .verify import VerificationReport, corpus_check, verify

__version__ = "0.1.0"
