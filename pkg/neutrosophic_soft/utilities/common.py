"""
Common Utilities
================

Define the common utilities objects that don't fall in any specific category.
"""

from __future__ import annotations

import json
import math
import os

from colour.hints import Any, Sequence, Tuple

from neutrosophic_soft.utilities.exceptions import (
    MalformedDocumentError,
    ShapeMismatchError,
)

__author__ = "Neutrosophic Soft Developers"
__copyright__ = "Copyright 2026 Neutrosophic Soft Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Neutrosophic Soft Developers"
__status__ = "Production"

__all__ = [
    "default_labels",
    "check_labels_match",
    "json_decode",
    "json_read",
    "round_number",
    "format_number",
]


def default_labels(prefix: str, count: int) -> Tuple[str, ...]:
    """
    Return the default labels for given prefix and count, i.e., *u_1*, *u_2*,
    etc...

    Parameters
    ----------
    prefix
        Label prefix, e.g., *u* for objects and *x* for parameters.
    count
        Labels count.

    Returns
    -------
    :class:`tuple`
        Labels.

    Examples
    --------
    >>> default_labels("u", 3)
    ('u_1', 'u_2', 'u_3')
    """

    return tuple(f"{prefix}_{i}" for i in range(1, count + 1))


def check_labels_match(
    labels_a: Sequence[str], labels_b: Sequence[str], axis: str = "labels"
) -> None:
    """
    Check that given label sequences are equal, i.e., same labels in the same
    order.

    Parameters
    ----------
    labels_a
        First label sequence.
    labels_b
        Second label sequence.
    axis
        Axis name used in the error message, e.g., *universe*.

    Raises
    ------
    ShapeMismatchError
        If the label sequences differ.

    Examples
    --------
    >>> check_labels_match(("u_1", "u_2"), ("u_1", "u_2"))
    """

    if tuple(labels_a) != tuple(labels_b):
        raise ShapeMismatchError(
            f"Operands {axis} differ: {list(labels_a)} != {list(labels_b)}!"
        )


def _reject_constant(constant: str) -> Any:
    """Reject the non-standard *NaN* and *Infinity* *JSON* constants."""

    raise MalformedDocumentError(f'"{constant}" is not a valid number!')


def json_decode(text: str, source: str = "<document>") -> Any:
    """
    Decode given *JSON* text.

    Parameters
    ----------
    text
        *JSON* text to decode.
    source
        Source name used in the error messages.

    Returns
    -------
    :class:`object`
        *JSON* data.

    Raises
    ------
    MalformedDocumentError
        If the text is not valid *JSON*.

    Examples
    --------
    >>> json_decode('{"universe": ["u_1"]}')
    {'universe': ['u_1']}
    """

    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as error:
        raise MalformedDocumentError(
            f'"{source}" is not a valid "JSON" document: {error.msg} '
            f"(line {error.lineno}, column {error.colno})!"
        ) from error


def json_read(path: str | os.PathLike) -> Any:
    """
    Read given file and return its content as *JSON*.

    Parameters
    ----------
    path
        File to read.

    Returns
    -------
    :class:`object`
        *JSON* data.

    Raises
    ------
    MalformedDocumentError
        If the file cannot be read or parsed as *JSON*.
    """

    try:
        with open(path, encoding="utf-8") as json_file:
            text = json_file.read()
    except (OSError, UnicodeDecodeError) as error:
        raise MalformedDocumentError(f'"{path}" file cannot be read: {error}') from error

    return json_decode(text, str(path))


def round_number(value: float, precision: int | None = None) -> float:
    """
    Round given number to given decimals, ``None`` keeps full precision.

    Examples
    --------
    >>> round_number(1 - 0.7 * 0.1, 4)
    0.93
    """

    value = float(value)

    if precision is None:
        return value

    rounded = round(value, precision)

    # Avoids "-0.0" in the output.
    return 0.0 if rounded == 0 else rounded


def format_number(value: float, precision: int) -> str:
    """
    Format given number with a fixed count of decimals.

    Parameters
    ----------
    value
        Number to format.
    precision
        Decimals count.

    Returns
    -------
    :class:`str`
        Formatted number.

    Examples
    --------
    >>> format_number(0.95, 4)
    '0.9500'
    """

    if math.isclose(value, 0, abs_tol=0.5 * 10**-precision) and value < 0:
        value = 0.0

    return f"{value:.{precision}f}"
