"""Constructive 3-colouring of triangle-free plane graphs.

The engine works on rotation systems (``planar``), reduces precoloured
instances (``reductions``) and recombines the pieces (``solver``).  A
brute-force backtracker (``oracle``) and a charge auditor (``discharging``)
serve as independent checks.
"""

from .discharging import AuditReport, ChargeLedger, audit, initial_charges, redistribute, tied_faces
from .errors import (
    BoundaryNotOuterCycle,
    EmbeddingError,
    MultiEdge,
    NoReductionFound,
    NotSphere,
    ParseError,
    ProofOrderViolation,
    TFColorError,
    TriangleFound,
)
from .formats import GraphFile, parse, serialize
from .generators import GenSpec, generate
from .oracle import brute_force_3color, count_extensions, first_violation, is_proper
from .planar import FaceWalk, RotationGraph, build, find_short_cycles, trace_faces
from .solver import SolverConfig, Trace, extend, three_color
from .validity import BoundaryColoring, ValidPair, is_valid_boundary, is_valid_pair, pair_less

__version__ = "0.1.0"
