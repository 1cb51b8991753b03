"""Legendrian and pseudo-Legendrian knot diagrams: words, moves, invariants and search."""
from .model import (DiagramWord, FrontWord, SingularDiagramWord, WordError, parse_any, parse_diagram,
                    parse_front, parse_singular)
from .moves import Move, MoveError, MoveTrace, apply_move, applicable_moves, insert_cusp_pair, insert_kink, stabilize
from .convert import front_to_diagram
from .gauss import GaussDiagram, diagram_to_gauss
from .invariants import invariant_report, rot_front, tb_front, v2, v3, whitney_rotation, writhe
from .search import SearchBudget, canonical_form, search_equivalent, verify_stab_commute, verify_stab_transport
from .vassiliev import Resolution, StabChain, alternating_sum, order_at_most, psi_extend, resolve

__all__ = [
    "DiagramWord", "FrontWord", "SingularDiagramWord", "WordError", "parse_any", "parse_diagram",
    "parse_front", "parse_singular", "Move", "MoveError", "MoveTrace", "apply_move", "applicable_moves",
    "insert_cusp_pair", "insert_kink", "stabilize", "front_to_diagram", "GaussDiagram", "diagram_to_gauss",
    "invariant_report", "rot_front", "tb_front", "v2", "v3", "whitney_rotation", "writhe", "SearchBudget",
    "canonical_form", "search_equivalent", "verify_stab_commute", "verify_stab_transport", "Resolution",
    "StabChain", "alternating_sum", "order_at_most", "psi_extend", "resolve",
]
