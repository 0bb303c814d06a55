"""Exact linear algebra on operators: brackets, spans, closure, and C2."""

from .operator import Operator, adjoint, bracket, trace
from .span import (
    ClosureNotReached,
    Membership,
    OperatorSpan,
    VectorSpan,
    in_span,
    rank,
    same_span,
    span_closure,
)

__all__ = [
    "Operator",
    "adjoint",
    "bracket",
    "trace",
    "ClosureNotReached",
    "Membership",
    "OperatorSpan",
    "VectorSpan",
    "in_span",
    "rank",
    "same_span",
    "span_closure",
]
