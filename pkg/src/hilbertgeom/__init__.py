"""Mechanized incidence and order geometry.

Checks finite models of the incidence axioms, searches for the smallest one,
decides betweenness exactly in the rational plane, and iterates a geometric
successor function on six-point diagrams.
"""
from .axioms import (
    AxiomId, AxiomReport, Group, Verdict, check_group_i, check_group_ii_linear,
    confirm_witness, find_linear_order_models,
)
from .finder import SearchBounds, SearchOutcome, enumerate_candidates, find_minimum, isomorphic
from .ordering import OrderingResult, middle_of_three, order_collinear, verify_theorem5
from .rational import (
    RatLine, RatPoint, Rational, between, collinear, extend, intersect, line_through,
    pasch_witness, theorem3_point,
)
from .structures import FiniteIncidenceStructure, parse_model, serialize_model, tetrahedron
from .successor import (
    Diagram, SuccessorStep, make_diagram, nat_point, successor, verify_injective,
)

__version__ = "0.1.0"
