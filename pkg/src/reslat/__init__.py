"""Finite residuated lattices: structure, spectra, and model search."""

from .algebra import (
    AxiomViolation,
    InvalidAlgebraError,
    ResiduatedLattice,
    check_tables,
    validate,
)
from .errors import InternalCheckError, PreconditionError

__version__ = "0.1.0"

__all__ = [
    "AxiomViolation",
    "InternalCheckError",
    "InvalidAlgebraError",
    "PreconditionError",
    "ResiduatedLattice",
    "check_tables",
    "validate",
    "__version__",
]
