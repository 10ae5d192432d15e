"""Exact enumeration of involution classes and centralizer orbits on alcoves
in affine Weyl groups."""

from alcove_orbits.config import (
    AlcoveOrbitsError,
    BudgetExceeded,
    Budgets,
    InvalidDatumError,
)
from alcove_orbits.cartan import RootDatum, build_datum, pairing

__version__ = "0.1.0"

__all__ = [
    "AlcoveOrbitsError",
    "BudgetExceeded",
    "Budgets",
    "InvalidDatumError",
    "RootDatum",
    "build_datum",
    "pairing",
    "__version__",
]
