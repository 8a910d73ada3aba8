"""Theorem-verification harness."""

from .family import FamilySpec
from .harness import VerificationReport, run_suite, run_suites
from .suites import SUITES

__all__ = ["FamilySpec", "VerificationReport", "run_suite", "run_suites", "SUITES"]
