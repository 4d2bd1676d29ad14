"""Take-away impartial game engine on hypergraphs."""

__version__ = "0.1.0"

from .closedform import Prediction, predict
from .core import (Move, Position, RemoveEdge, RemoveVertex, apply_move,
                   legal_moves, make_position, parse_instance,
                   serialize_instance)
from .grundy import GrundyResult, TranspositionTable, grundy, mex, winning_moves
from .structure import Group, StructureReport, check_lemmas, classify

__all__ = [
    "Move", "Position", "RemoveEdge", "RemoveVertex", "apply_move",
    "legal_moves", "make_position", "parse_instance", "serialize_instance",
    "GrundyResult", "TranspositionTable", "grundy", "mex", "winning_moves",
    "Group", "StructureReport", "check_lemmas", "classify",
    "Prediction", "predict",
]
