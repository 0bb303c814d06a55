"""Exact operator algebra of the exterior algebra of a rank-2 WSD fiber.

The twelve geometric generators act on the 64-dimensional exterior algebra
and generate a copy of sl(6, C). All arithmetic is over Q(i).
"""

from .scalars import GaussianRational, parse_scalar, format_scalar
from .exterior import Multivector
from .lie.operator import Operator
from .lie.span import OperatorSpan, VectorSpan
from .canon_ops import get_operator, generators, registry_names
from ._kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "GaussianRational",
    "parse_scalar",
    "format_scalar",
    "Multivector",
    "Operator",
    "OperatorSpan",
    "VectorSpan",
    "get_operator",
    "generators",
    "registry_names",
    "BACKEND",
    "__version__",
]
