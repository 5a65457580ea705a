"""Acceptance suite package initialization"""

from .runner import CRITERIA, LEVELS, CriterionResult, SuiteReport, run_suite

__all__ = [
    "CRITERIA",
    "LEVELS",
    "CriterionResult",
    "SuiteReport",
    "run_suite",
]
