"""hallq: exact Ringel-Hall algebra computations for acyclic quivers
over finite fields."""

from .algebra import HallAlgebra, HallElement
from .catalog import IsoClass, ModuleCatalog
from .coeffs import QSqrt
from .errors import DEFAULT_GUARDS, GuardExceeded, Guards, HallqError, InputError, ValidationFailure
from .gf import GF
from .halln import HallNumbers
from .hallpoly import HallPolynomial, HallPolynomialFitter, ModuleSpec, instantiate
from .hopf import ExtendedAlgebra
from .orders import DegenerationOrders
from .quiver import (
    DimVector,
    Quiver,
    TameType,
    cartan_matrix,
    euler_form,
    recognize_tame,
    symmetric_form,
)
from .reps import Representation
from .tame import Partition, TameStructure

__version__ = "0.1.0"

__all__ = [
    "GF",
    "Quiver",
    "DimVector",
    "TameType",
    "euler_form",
    "symmetric_form",
    "cartan_matrix",
    "recognize_tame",
    "Representation",
    "ModuleCatalog",
    "IsoClass",
    "HallNumbers",
    "HallAlgebra",
    "HallElement",
    "ExtendedAlgebra",
    "QSqrt",
    "ModuleSpec",
    "HallPolynomial",
    "HallPolynomialFitter",
    "instantiate",
    "DegenerationOrders",
    "TameStructure",
    "Partition",
    "Guards",
    "DEFAULT_GUARDS",
    "HallqError",
    "GuardExceeded",
    "InputError",
    "ValidationFailure",
    "__version__",
]
