"""Finite heterogeneous relation algebra over labeled sets."""

from .binop import BinOp
from .boolalg import LiftedAlgebra, lifted
from .errors import (
    CapExceeded,
    NotAMapping,
    NotAPoint,
    ParseError,
    RelkitError,
    TermTypeError,
    TypeMismatch,
    UnboundIdentifier,
)
from .finset import UNIT, Atomic, Pair, Power, Sum, Universe, atomic
from .images import existential_image, inverse_image, power_relator
from .powerset import membership
from .prodsum import direct_sum, fork, join, kronecker, product, unvec, vec
from .relcore import Relation, bottom, identity, left_residual, right_residual, syq, top

__version__ = "0.1.0"

__all__ = [
    "UNIT",
    "Atomic",
    "BinOp",
    "CapExceeded",
    "LiftedAlgebra",
    "NotAMapping",
    "NotAPoint",
    "Pair",
    "ParseError",
    "Power",
    "Relation",
    "RelkitError",
    "Sum",
    "TermTypeError",
    "TypeMismatch",
    "UnboundIdentifier",
    "Universe",
    "atomic",
    "bottom",
    "direct_sum",
    "existential_image",
    "fork",
    "identity",
    "inverse_image",
    "join",
    "kronecker",
    "left_residual",
    "lifted",
    "membership",
    "power_relator",
    "product",
    "right_residual",
    "syq",
    "top",
    "unvec",
    "vec",
]
