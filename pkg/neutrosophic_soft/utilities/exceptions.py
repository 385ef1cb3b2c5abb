"""
Exceptions
==========

Define the exceptions raised by *Neutrosophic - Soft*:

-   :class:`neutrosophic_soft.utilities.ValidationError`
-   :class:`neutrosophic_soft.utilities.OutOfRangeError`
-   :class:`neutrosophic_soft.utilities.DuplicateLabelError`
-   :class:`neutrosophic_soft.utilities.DimensionMismatchError`
-   :class:`neutrosophic_soft.utilities.MalformedDocumentError`
-   :class:`neutrosophic_soft.utilities.ShapeMismatchError`
-   :class:`neutrosophic_soft.utilities.BlockStructureError`
-   :class:`neutrosophic_soft.utilities.UnknownNormError`

All of them are :class:`ValueError` sub-classes so that callers only
interested in bad input can keep catching :class:`ValueError`.
"""

from __future__ import annotations

__author__ = "Neutrosophic Soft Developers"
__copyright__ = "Copyright 2026 Neutrosophic Soft Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Neutrosophic Soft Developers"
__status__ = "Production"

__all__ = [
    "ValidationError",
    "OutOfRangeError",
    "DuplicateLabelError",
    "DimensionMismatchError",
    "MalformedDocumentError",
    "ShapeMismatchError",
    "BlockStructureError",
    "UnknownNormError",
]


class ValidationError(ValueError):
    """Base class for invalid neutrosophic data."""


class OutOfRangeError(ValidationError):
    """
    Raised when a membership component is not a real number in domain [0, 1].

    Parameters
    ----------
    message
        Error message.
    row
        Row, i.e., object label of the offending cell.
    column
        Column, i.e., parameter label of the offending cell.
    component
        Offending component, i.e., *T*, *I* or *F*.
    value
        Offending value.
    """

    def __init__(
        self,
        message: str,
        row: str | None = None,
        column: str | None = None,
        component: str | None = None,
        value: object = None,
    ) -> None:
        super().__init__(message)

        self.row = row
        self.column = column
        self.component = component
        self.value = value


class DuplicateLabelError(ValidationError):
    """Raised when a universe or a parameter set repeats a label."""


class DimensionMismatchError(ValidationError):
    """Raised when a grid does not match the size of its labels."""


class MalformedDocumentError(ValidationError):
    """Raised when a document cannot be read or decoded."""


class ShapeMismatchError(ValueError):
    """Raised when operands do not share dimensions and labels."""


class BlockStructureError(ShapeMismatchError):
    """Raised when a product matrix column count is not a perfect square."""


class UnknownNormError(ValueError):
    """Raised when a norm name is not one of the supported dual pairs."""
