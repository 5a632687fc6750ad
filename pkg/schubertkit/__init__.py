"""Double Schubert polynomials of types A, B, C and D in exact arithmetic."""
from __future__ import annotations

from .exceptions import SchubertKitError
from .schubert import (
    SchubertPoly,
    StanleyFunction,
    eta,
    reverse_schubert,
    schubert,
    splitting_expand,
    stanley,
    stanley_coefficients,
    theta,
)
from .verify import Report, run_suite
from .weyl import FlagSequence, Kind, KStrictPartition, TypedKStrictPartition, WeylElement

__version__ = "1.0.0"

__all__ = [
    "FlagSequence",
    "KStrictPartition",
    "Kind",
    "Report",
    "SchubertKitError",
    "SchubertPoly",
    "StanleyFunction",
    "TypedKStrictPartition",
    "WeylElement",
    "eta",
    "reverse_schubert",
    "run_suite",
    "schubert",
    "splitting_expand",
    "stanley",
    "stanley_coefficients",
    "theta",
]
