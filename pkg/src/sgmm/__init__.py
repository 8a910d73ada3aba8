"""Monomial fractional ideals of numerical semigroup rings and their minimal-multiplicity theory."""

from .ideal import SemigroupIdeal
from .semigroup import NumericalSemigroup, sg_new

__version__ = "0.1.0"

__all__ = ["NumericalSemigroup", "SemigroupIdeal", "sg_new"]
