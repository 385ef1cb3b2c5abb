"""
Matrix Documents
================

Define the input and output of the *JSON* matrix documents and the rendering
of the results:

-   :func:`neutrosophic_soft.io.matrix_from_data`
-   :func:`neutrosophic_soft.io.parse_matrix`
-   :func:`neutrosophic_soft.io.parse_soft_set`
-   :func:`neutrosophic_soft.io.read_matrix`
-   :func:`neutrosophic_soft.io.serialize_matrix`
-   :func:`neutrosophic_soft.io.write_text`
-   :func:`neutrosophic_soft.io.format_outcome_table`
-   :func:`neutrosophic_soft.io.format_outcome_json`
-   :func:`neutrosophic_soft.io.format_shape_report`

A matrix document lists the universe objects, the parameters and the
row-major entries, one :math:`[T, I, F]` triple per object and parameter::

    {
      "universe": ["u_1", "u_2"],
      "parameters": ["x_1"],
      "entries": [
        [[0.7, 0.6, 0.7]],
        [[0.4, 0.2, 0.8]]
      ]
    }
"""

from __future__ import annotations

import json
import os

from colour.hints import Any, List

from neutrosophic_soft.algebra import COMPONENTS
from neutrosophic_soft.decision import DecisionOutcome
from neutrosophic_soft.matrices import NsMatrix, ShapeReport, to_soft_set
from neutrosophic_soft.sets import NsSoftSet, ParameterSet, Universe
from neutrosophic_soft.utilities import (
    DimensionMismatchError,
    MalformedDocumentError,
    format_number,
    json_decode,
    json_read,
    round_number,
)

__author__ = "Neutrosophic Soft Developers"
__copyright__ = "Copyright 2026 Neutrosophic Soft Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Neutrosophic Soft Developers"
__status__ = "Production"

__all__ = [
    "DOCUMENT_KEYS",
    "matrix_from_data",
    "parse_matrix",
    "parse_soft_set",
    "read_matrix",
    "serialize_matrix",
    "write_text",
    "format_outcome_table",
    "format_outcome_json",
    "format_shape_report",
]

DOCUMENT_KEYS: tuple = ("universe", "parameters", "entries")
"""Keys of a matrix document."""


def _is_number(value: Any) -> bool:
    """Return whether given *JSON* value is a number."""

    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _check_entries(data: dict, universe: Universe, parameters: ParameterSet) -> None:
    """
    Check that the entries of given document data form a grid of numeric
    triples matching given labels.
    """

    entries = data["entries"]

    if not isinstance(entries, list) or len(entries) != len(universe):
        raise DimensionMismatchError(
            f'"entries" must list {len(universe)} rows, one per universe object!'
        )

    for u, row in zip(universe, entries):
        if not isinstance(row, list) or len(row) != len(parameters):
            raise DimensionMismatchError(
                f'"{u}" entries row must list {len(parameters)} triples, one per '
                f"parameter!"
            )

        for x, triple in zip(parameters, row):
            if not isinstance(triple, list) or len(triple) != len(COMPONENTS):
                raise DimensionMismatchError(
                    f'"({u}, {x})" entry must be a [T, I, F] triple, got '
                    f"{json.dumps(triple)}!"
                )

            for component, value in zip(COMPONENTS, triple):
                if not _is_number(value):
                    raise MalformedDocumentError(
                        f'"({u}, {x})" entry "{component}" component must be a '
                        f"number, got {json.dumps(value)}!"
                    )


def matrix_from_data(data: Any, source: str = "<document>") -> NsMatrix:
    """
    Return the neutrosophic soft matrix of given decoded matrix document.

    Parameters
    ----------
    data
        Decoded matrix document.
    source
        Source name used in the error messages.

    Returns
    -------
    :class:`neutrosophic_soft.matrices.NsMatrix`
        Neutrosophic soft matrix.

    Raises
    ------
    MalformedDocumentError
        If the document does not have the matrix document structure.
    DuplicateLabelError
        If a label is repeated.
    DimensionMismatchError
        If the entries do not match the labels.
    OutOfRangeError
        If a component is not in domain [0, 1], the first offending cell is
        reported.
    """

    if not isinstance(data, dict):
        raise MalformedDocumentError(f'"{source}" document must be a "JSON" object!')

    missing = [key for key in DOCUMENT_KEYS if key not in data]
    if missing:
        raise MalformedDocumentError(
            f'"{source}" document is missing the {missing} key(s)!'
        )

    for key in ("universe", "parameters"):
        if not isinstance(data[key], list):
            raise MalformedDocumentError(
                f'"{source}" document "{key}" must be a list of labels!'
            )

    universe = Universe(data["universe"])
    parameters = ParameterSet(data["parameters"])

    _check_entries(data, universe, parameters)

    return NsMatrix(data["entries"], universe, parameters)


def parse_matrix(document: str, source: str = "<document>") -> NsMatrix:
    """
    Parse given *JSON* matrix document.

    Parameters
    ----------
    document
        *JSON* matrix document.
    source
        Source name used in the error messages.

    Returns
    -------
    :class:`neutrosophic_soft.matrices.NsMatrix`
        Neutrosophic soft matrix.

    Raises
    ------
    ValidationError
        If the document is not valid, see
        :func:`neutrosophic_soft.io.matrix_from_data` definition.

    Examples
    --------
    >>> M = parse_matrix(
    ...     '{"universe": ["u_1"], "parameters": ["x_1", "x_2"], '
    ...     '"entries": [[[1.0, 0.1, 0.1], [1.0, 0.4, 0.1]]]}'
    ... )
    >>> M[0, 1]
    NsValue(T=1.0, I=0.4, F=0.1)
    """

    return matrix_from_data(json_decode(document, source), source)


def parse_soft_set(document: str, source: str = "<document>") -> NsSoftSet:
    """
    Parse given *JSON* matrix document as a neutrosophic soft set.

    Parameters
    ----------
    document
        *JSON* matrix document.
    source
        Source name used in the error messages.

    Returns
    -------
    :class:`neutrosophic_soft.sets.NsSoftSet`
        Neutrosophic soft set.
    """

    return to_soft_set(parse_matrix(document, source))


def read_matrix(path: str | os.PathLike) -> NsMatrix:
    """
    Read given *JSON* matrix document file.

    Parameters
    ----------
    path
        *JSON* matrix document file.

    Returns
    -------
    :class:`neutrosophic_soft.matrices.NsMatrix`
        Neutrosophic soft matrix.

    Raises
    ------
    ValidationError
        If the file cannot be read or is not a valid matrix document.
    """

    return matrix_from_data(json_read(path), str(path))


def _dumps(data: Any) -> str:
    """Dump given data as compact single line *JSON*."""

    return json.dumps(data, ensure_ascii=False)


def serialize_matrix(M: NsMatrix, precision: int | None = None) -> str:
    """
    Serialize given neutrosophic soft matrix as a *JSON* matrix document, one
    matrix row per line.

    Parameters
    ----------
    M
        Neutrosophic soft matrix.
    precision
        Decimals the components are rounded to, full precision if *None*.

    Returns
    -------
    :class:`str`
        *JSON* matrix document.

    Examples
    --------
    >>> print(serialize_matrix(NsMatrix([[(0.7, 0.6, 0.7), (0.5, 0.7, 0.8)]])))
    {
      "universe": ["u_1"],
      "parameters": ["x_1", "x_2"],
      "entries": [
        [[0.7, 0.6, 0.7], [0.5, 0.7, 0.8]]
      ]
    }
    """

    rows = [
        _dumps(
            [[round_number(value, precision) for value in cell] for cell in row]
        )
        for row in M.cells.tolist()
    ]

    lines = [
        "{",
        f'  "universe": {_dumps(list(M.row_labels))},',
        f'  "parameters": {_dumps(list(M.col_labels))},',
        '  "entries": [',
        ",\n".join(f"    {row}" for row in rows),
        "  ]",
        "}",
    ]

    return "\n".join(lines)


def write_text(text: str, path: str | os.PathLike) -> None:
    """
    Write given text to given file, ending it with a newline.

    Parameters
    ----------
    text
        Text to write.
    path
        File to write.
    """

    with open(path, "w", encoding="utf-8", newline="\n") as text_file:
        text_file.write(text if text.endswith("\n") else f"{text}\n")


def _format_optimum(outcome: DecisionOutcome, precision: int) -> str:
    """Format the optimum of given decision outcome."""

    return ", ".join(
        f"{object_score.object} ({format_number(object_score.s, precision)})"
        for object_score in outcome.optimum
    )


def format_outcome_table(outcome: DecisionOutcome, precision: int = 4) -> str:
    """
    Format given decision outcome as an aligned text table followed by the
    optimum, the objects keep the universe order.

    Parameters
    ----------
    outcome
        Decision outcome.
    precision
        Decimals count.

    Returns
    -------
    :class:`str`
        Text table.

    Examples
    --------
    >>> from neutrosophic_soft.decision import optimum
    >>> print(format_outcome_table(optimum(["u_1"], [(1, 0.5, 0.1)]), 2))
    object  mu    nu    w     s
    u_1     1.00  0.50  0.10  0.95
    optimum: u_1 (0.95)
    """

    rows: List[List[str]] = [["object", "mu", "nu", "w", "s"]]
    for object_score in outcome.per_object:
        rows.append(
            [
                object_score.object,
                *(format_number(value, precision) for value in object_score.d),
                format_number(object_score.s, precision),
            ]
        )

    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]

    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        for row in rows
    ]
    lines.append(f"optimum: {_format_optimum(outcome, precision)}")

    return "\n".join(lines)


def format_outcome_json(outcome: DecisionOutcome, precision: int | None = 4) -> str:
    """
    Format given decision outcome as *JSON*, one object per line.

    Parameters
    ----------
    outcome
        Decision outcome.
    precision
        Decimals the numbers are rounded to, full precision if *None*.

    Returns
    -------
    :class:`str`
        *JSON* document.

    Examples
    --------
    >>> from neutrosophic_soft.decision import optimum
    >>> print(format_outcome_json(optimum(["u_1"], [(1, 0.5, 0.1)])))
    {
      "scores": [
        {"object": "u_1", "d": [1.0, 0.5, 0.1], "s": 0.95}
      ],
      "optimum": [
        {"object": "u_1", "s": 0.95}
      ]
    }
    """

    scores = [
        _dumps(
            {
                "object": object_score.object,
                "d": [round_number(value, precision) for value in object_score.d],
                "s": round_number(object_score.s, precision),
            }
        )
        for object_score in outcome.per_object
    ]
    optimum = [
        _dumps(
            {
                "object": object_score.object,
                "s": round_number(object_score.s, precision),
            }
        )
        for object_score in outcome.optimum
    ]

    lines = [
        "{",
        '  "scores": [',
        ",\n".join(f"    {score}" for score in scores),
        "  ],",
        '  "optimum": [',
        ",\n".join(f"    {object_score}" for object_score in optimum),
        "  ]",
        "}",
    ]

    return "\n".join(lines)


def format_shape_report(report: ShapeReport) -> str:
    """
    Format given shape classification, one property per line.

    Examples
    --------
    >>> from neutrosophic_soft.matrices import classify, zero_matrix
    >>> print(format_shape_report(classify(zero_matrix(["u_1"], ["x_1"]))))
    row: yes
    column: yes
    square: yes
    diagonal: yes
    symmetric: yes
    zero: yes
    universal: no
    """

    return "\n".join(
        f"{field.replace('is_', '', 1)}: {'yes' if value else 'no'}"
        for field, value in zip(report._fields, report)
    )
