"""
Neutrosophic Values
===================

Define the neutrosophic value types and their validation:

-   :func:`neutrosophic_soft.algebra.unit_value`
-   :class:`neutrosophic_soft.algebra.NsValue`
-   :attr:`neutrosophic_soft.algebra.ZERO_VALUE`
-   :attr:`neutrosophic_soft.algebra.UNIVERSAL_VALUE`
-   :attr:`neutrosophic_soft.algebra.COMPLEMENT_MODES`
-   :func:`neutrosophic_soft.algebra.validate_complement_mode`
-   :func:`neutrosophic_soft.algebra.as_membership_grid`

A neutrosophic value is a triple of independent truth, indeterminacy and
falsity memberships, each one in domain [0, 1], there is no restriction on
their sum which is thus in domain [0, 3].
"""

from __future__ import annotations

import math
from collections import namedtuple

import numpy as np
from colour.hints import Any, ArrayLike, Literal, NDArrayFloat, Sequence
from colour.utilities import validate_method

from neutrosophic_soft.utilities import DimensionMismatchError, OutOfRangeError

__author__ = "Neutrosophic Soft Developers"
__copyright__ = "Copyright 2026 Neutrosophic Soft Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Neutrosophic Soft Developers"
__status__ = "Production"

__all__ = [
    "COMPONENTS",
    "unit_value",
    "NsValue",
    "ZERO_VALUE",
    "UNIVERSAL_VALUE",
    "LiteralComplementMode",
    "COMPLEMENT_MODES",
    "validate_complement_mode",
    "as_membership_grid",
]

COMPONENTS: tuple = ("T", "I", "F")
"""Names of the truth, indeterminacy and falsity components."""


def _is_real(value: Any) -> bool:
    """Return whether given value is a real number, booleans excluded."""

    return isinstance(value, (int, float, np.integer, np.floating)) and not isinstance(
        value, (bool, np.bool_)
    )


def unit_value(value: Any, name: str = "value") -> float:
    """
    Validate that given value is a real number in domain [0, 1] and return it
    as a :class:`float`.

    Parameters
    ----------
    value
        Value to validate.
    name
        Value name used in the error message.

    Returns
    -------
    :class:`float`
        Validated value.

    Raises
    ------
    OutOfRangeError
        If the value is not a finite real number in domain [0, 1].

    Examples
    --------
    >>> unit_value(1)
    1.0
    >>> unit_value(1.2)  # doctest: +ELLIPSIS
    Traceback (most recent call last):
    ...
    neutrosophic_soft.utilities.exceptions.OutOfRangeError: "value" must be ...
    """

    if not _is_real(value) or not math.isfinite(value) or not 0 <= value <= 1:
        raise OutOfRangeError(
            f'"{name}" must be a real number in domain [0, 1], got {value!r}!',
            component=name,
            value=value,
        )

    return float(value)


class NsValue(namedtuple("NsValue", COMPONENTS)):
    """
    Define a neutrosophic value, i.e., a triple of truth-membership
    :math:`T`, indeterminacy-membership :math:`I` and falsity-membership
    :math:`F`.

    Parameters
    ----------
    T
        Truth-membership in domain [0, 1].
    I
        Indeterminacy-membership in domain [0, 1].
    F
        Falsity-membership in domain [0, 1].

    Examples
    --------
    >>> NsValue(0.3, 0.1, 0.4)
    NsValue(T=0.3, I=0.1, F=0.4)
    """

    __slots__ = ()

    def __new__(cls, T: Any, I: Any, F: Any) -> NsValue:  # noqa: E741
        """Validate the components and build the neutrosophic value."""

        return super().__new__(
            cls, unit_value(T, "T"), unit_value(I, "I"), unit_value(F, "F")
        )

    def is_close(self, other: Sequence, tolerance: float = 0) -> bool:
        """
        Return whether the neutrosophic value is equal to given triple within
        given absolute tolerance.

        Parameters
        ----------
        other
            Triple to compare with.
        tolerance
            Absolute tolerance.

        Returns
        -------
        :class:`bool`
            Whether the values are equal.

        Examples
        --------
        >>> NsValue(1 - 0.7, 0, 1).is_close((0.3, 0, 1), 1e-9)
        True
        """

        return all(abs(a - b) <= tolerance for a, b in zip(self, other))


ZERO_VALUE: NsValue = NsValue(0, 1, 1)
"""Zero, i.e., bottom neutrosophic value :math:`(0, 1, 1)`."""

UNIVERSAL_VALUE: NsValue = NsValue(1, 0, 0)
"""Universal, i.e., top neutrosophic value :math:`(1, 0, 0)`."""

LiteralComplementMode = Literal["identity_i", "one_minus_i"]
"""
Complement conventions: *identity_i* keeps the indeterminacy-membership
unchanged while *one_minus_i* replaces it with :math:`1 - I`.
"""

COMPLEMENT_MODES: tuple = ("identity_i", "one_minus_i")
"""Supported complement conventions."""


def validate_complement_mode(mode: LiteralComplementMode | str) -> str:
    """
    Validate given complement mode and return its canonical, lower-case name.

    Parameters
    ----------
    mode
        Complement mode.

    Returns
    -------
    :class:`str`
        Canonical complement mode.

    Raises
    ------
    ValueError
        If the complement mode is not supported.

    Examples
    --------
    >>> validate_complement_mode("One_Minus_I")
    'one_minus_i'
    """

    return validate_method(
        mode,
        COMPLEMENT_MODES,
        '"{0}" complement mode is invalid, it must be one of {1}!',
    )


def as_membership_grid(
    cells: ArrayLike,
    row_labels: Sequence[str],
    column_labels: Sequence[str],
) -> NDArrayFloat:
    """
    Convert given cells to a read-only grid of neutrosophic values of shape
    (rows, columns, 3) and validate it.

    Parameters
    ----------
    cells
        Cells to convert, any nested sequence of triples.
    row_labels
        Row labels, used for the shape check and the error messages.
    column_labels
        Column labels, used for the shape check and the error messages.

    Returns
    -------
    :class:`numpy.ndarray`
        Read-only grid of neutrosophic values.

    Raises
    ------
    DimensionMismatchError
        If the grid shape does not match the labels.
    OutOfRangeError
        If a component is not a real number in domain [0, 1], the error names
        the first offending cell in row-major order.
    """

    shape = (len(row_labels), len(column_labels), 3)

    try:
        grid = np.array(cells, dtype=np.float64)
    except (TypeError, ValueError) as error:
        raise DimensionMismatchError(
            f"Cells cannot be converted to a {shape[0]}x{shape[1]} grid of "
            f"triples: {error}"
        ) from error

    if grid.shape != shape:
        raise DimensionMismatchError(
            f"Cells shape {grid.shape} does not match the expected {shape} "
            f"shape given by {shape[0]} row and {shape[1]} column labels!"
        )

    invalid = ~(np.isfinite(grid) & (grid >= 0) & (grid <= 1))
    if np.any(invalid):
        i, j, c = (int(index) for index in np.argwhere(invalid)[0])
        value = float(grid[i, j, c])
        raise OutOfRangeError(
            f'Cell ("{row_labels[i]}", "{column_labels[j]}") component '
            f'"{COMPONENTS[c]}" must be in domain [0, 1], got {value!r}!',
            row=row_labels[i],
            column=column_labels[j],
            component=COMPONENTS[c],
            value=value,
        )

    grid.setflags(write=False)

    return grid
