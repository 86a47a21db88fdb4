"""Catalan and shifted matroids, their Tutte polynomials, and friends."""

from .catalan_shifted import (
    ShiftVector,
    catalan_as_shifted,
    catalan_matroid,
    shifted_matroid,
)
from .errors import DomainError, ResourceLimitError
from .matroid_core import BasisFamily, check_basis_axioms, uniform
from .paths import StepSet, catalan_number, dyck_paths
from .tutte import (
    BivariatePolynomial,
    tutte_catalan_direct,
    tutte_via_activities,
    tutte_via_corank_nullity,
)

__all__ = [
    "BasisFamily",
    "BivariatePolynomial",
    "DomainError",
    "ResourceLimitError",
    "ShiftVector",
    "StepSet",
    "catalan_as_shifted",
    "catalan_matroid",
    "catalan_number",
    "check_basis_axioms",
    "dyck_paths",
    "shifted_matroid",
    "tutte_catalan_direct",
    "tutte_via_activities",
    "tutte_via_corank_nullity",
    "uniform",
]

__version__ = "0.1.0"
