"""
Constants
=========

Define the *Neutrosophic - Soft* constants.
"""

from __future__ import annotations

__author__ = "Neutrosophic Soft Developers"
__copyright__ = "Copyright 2026 Neutrosophic Soft Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Neutrosophic Soft Developers"
__status__ = "Production"

__all__ = [
    "TOLERANCE_ABSOLUTE_SCORE",
    "TOLERANCE_ABSOLUTE_TESTS",
    "PRECISION_MAXIMUM",
    "SYMBOL_AND",
    "SYMBOL_OR",
    "SYMBOL_TIMES",
]

TOLERANCE_ABSOLUTE_SCORE: float = 1e-12
"""Absolute tolerance under which two decision scores are tied."""

TOLERANCE_ABSOLUTE_TESTS: float = 1e-9
"""Absolute tolerance used when comparing computed memberships in tests."""

PRECISION_MAXIMUM: int = 17
"""Maximum count of decimals a *float64* can meaningfully be rounded to."""

SYMBOL_AND: str = "\u2227"
"""Symbol joining the parameter labels of an *And*-product column."""

SYMBOL_OR: str = "\u2228"
"""Symbol joining the parameter labels of an *Or*-product column."""

SYMBOL_TIMES: str = "\u00d7"
"""Symbol separating the dimensions of a matrix, e.g., *3x2*."""
