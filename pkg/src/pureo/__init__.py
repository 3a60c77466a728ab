"""Exact search, enumeration and construction of pure O-sequences."""

from .monomials import Monomial, OrderIdeal, canonical_form, divisor_closure, h_vector, is_pure, support
from .purity import PurityVerdict, SearchBudget, Status, decide_pure, enumerate_pure, enumerate_pure_by_type
from .sequences import IntSeq, analyze_shape, first_difference, is_differentiable, is_o_sequence, macaulay_growth

__all__ = [
    "IntSeq",
    "Monomial",
    "OrderIdeal",
    "PurityVerdict",
    "SearchBudget",
    "Status",
    "analyze_shape",
    "canonical_form",
    "decide_pure",
    "divisor_closure",
    "enumerate_pure",
    "enumerate_pure_by_type",
    "first_difference",
    "h_vector",
    "is_differentiable",
    "is_o_sequence",
    "is_pure",
    "macaulay_growth",
    "support",
]

__version__ = "0.1.0"
