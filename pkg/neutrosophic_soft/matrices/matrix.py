"""
Neutrosophic Soft Matrices
==========================

Define the neutrosophic soft matrices and their algebra:

-   :class:`neutrosophic_soft.matrices.NsMatrix`
-   :class:`neutrosophic_soft.matrices.ShapeReport`
-   :func:`neutrosophic_soft.matrices.from_soft_set`
-   :func:`neutrosophic_soft.matrices.to_soft_set`
-   :func:`neutrosophic_soft.matrices.transpose`
-   :func:`neutrosophic_soft.matrices.classify`
-   :func:`neutrosophic_soft.matrices.mat_union`
-   :func:`neutrosophic_soft.matrices.mat_intersection`
-   :func:`neutrosophic_soft.matrices.mat_complement`
-   :func:`neutrosophic_soft.matrices.mat_subset`
-   :func:`neutrosophic_soft.matrices.mat_proper_subset`
-   :func:`neutrosophic_soft.matrices.mat_equal`
-   :func:`neutrosophic_soft.matrices.mat_disjoint`
-   :func:`neutrosophic_soft.matrices.zero_matrix`
-   :func:`neutrosophic_soft.matrices.universal_matrix`
-   :func:`neutrosophic_soft.matrices.random_matrix`

The cell :math:`a_{ij}` of the matrix of a neutrosophic soft set :math:`N` is
the value of object :math:`u_i` under parameter :math:`x_j`, i.e.,
:math:`(T_{f_N(x_j)}(u_i), I_{f_N(x_j)}(u_i), F_{f_N(x_j)}(u_i))`.

The matrix union and intersection are fixed to the minimum and maximum
operators so that they distribute over each other, the norm parametrised
combinations are available on the sets and the products.
"""

from __future__ import annotations

from collections import namedtuple

import numpy as np
from colour.hints import Any, ArrayLike, NDArrayFloat, Sequence, Tuple
from colour.utilities import optional, tsplit, tstack

from neutrosophic_soft.algebra import (
    UNIVERSAL_VALUE,
    ZERO_VALUE,
    NsValue,
    as_membership_grid,
)
from neutrosophic_soft.sets import NsSoftSet, ParameterSet, Universe
from neutrosophic_soft.utilities import (
    DimensionMismatchError,
    check_labels_match,
)

__author__ = "Neutrosophic Soft Developers"
__copyright__ = "Copyright 2026 Neutrosophic Soft Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Neutrosophic Soft Developers"
__status__ = "Production"

__all__ = [
    "NsMatrix",
    "ShapeReport",
    "from_soft_set",
    "to_soft_set",
    "transpose",
    "classify",
    "mat_union",
    "mat_intersection",
    "mat_complement",
    "mat_subset",
    "mat_proper_subset",
    "mat_equal",
    "mat_disjoint",
    "zero_matrix",
    "universal_matrix",
    "random_matrix",
]


def _cells_shape(cells: ArrayLike) -> Tuple[int, ...]:
    """Return the shape of given cells or raise a dimension mismatch error."""

    try:
        shape = np.array(cells, dtype=np.float64).shape
    except (TypeError, ValueError) as error:
        raise DimensionMismatchError(
            f"Cells cannot be converted to a grid of triples: {error}"
        ) from error

    if len(shape) != 3 or shape[-1] != 3:
        raise DimensionMismatchError(
            f"Cells must be a grid of triples of shape (m, n, 3), got {shape}!"
        )

    return shape


class NsMatrix:
    """
    Define an :math:`m \\times n` neutrosophic soft matrix.

    Parameters
    ----------
    cells
        Neutrosophic values of shape (m, n, 3).
    row_labels
        Row labels, i.e., the universe objects, default to *u_1*, ...,
        *u_m*.
    col_labels
        Column labels, i.e., the parameters, default to *x_1*, ..., *x_n*.

    Attributes
    ----------
    -   :attr:`neutrosophic_soft.matrices.NsMatrix.cells`
    -   :attr:`neutrosophic_soft.matrices.NsMatrix.row_labels`
    -   :attr:`neutrosophic_soft.matrices.NsMatrix.col_labels`
    -   :attr:`neutrosophic_soft.matrices.NsMatrix.shape`
    -   :attr:`neutrosophic_soft.matrices.NsMatrix.T`
    -   :attr:`neutrosophic_soft.matrices.NsMatrix.I`
    -   :attr:`neutrosophic_soft.matrices.NsMatrix.F`

    Methods
    -------
    -   :meth:`neutrosophic_soft.matrices.NsMatrix.__init__`
    -   :meth:`neutrosophic_soft.matrices.NsMatrix.__getitem__`
    -   :meth:`neutrosophic_soft.matrices.NsMatrix.__eq__`
    -   :meth:`neutrosophic_soft.matrices.NsMatrix.__str__`

    Examples
    --------
    >>> M = NsMatrix([[(0.7, 0.6, 0.7), (0.5, 0.7, 0.8)]])
    >>> M.shape
    (1, 2)
    >>> M[0, 1]
    NsValue(T=0.5, I=0.7, F=0.8)
    >>> print(M)
    [(0.7, 0.6, 0.7) (0.5, 0.7, 0.8)]
    """

    def __init__(
        self,
        cells: ArrayLike,
        row_labels: Sequence[str] | None = None,
        col_labels: Sequence[str] | None = None,
    ) -> None:
        if row_labels is None or col_labels is None:
            m, n, _ = _cells_shape(cells)

            row_labels = optional(row_labels, Universe.default(m))
            col_labels = optional(col_labels, ParameterSet.default(n))

        self._row_labels: Universe = Universe(row_labels)
        self._col_labels: ParameterSet = ParameterSet(col_labels)
        self._cells: NDArrayFloat = as_membership_grid(
            cells, self._row_labels, self._col_labels
        )

    @classmethod
    def _from_grid(
        cls,
        grid: NDArrayFloat,
        row_labels: Universe,
        col_labels: ParameterSet,
    ) -> NsMatrix:
        """
        Build a neutrosophic soft matrix from an already validated grid,
        typically the result of an operation, clipping the rounding errors of
        the norms.
        """

        matrix = cls.__new__(cls)
        matrix._row_labels = row_labels
        matrix._col_labels = col_labels
        matrix._cells = np.clip(grid, 0, 1)
        matrix._cells.setflags(write=False)

        return matrix

    @property
    def cells(self) -> NDArrayFloat:
        """
        Getter property for the read-only cells of shape (m, n, 3).

        Returns
        -------
        :class:`numpy.ndarray`
            Cells.
        """

        return self._cells

    @property
    def row_labels(self) -> Universe:
        """
        Getter property for the row labels.

        Returns
        -------
        :class:`neutrosophic_soft.sets.Universe`
            Row labels.
        """

        return self._row_labels

    @property
    def col_labels(self) -> ParameterSet:
        """
        Getter property for the column labels.

        Returns
        -------
        :class:`neutrosophic_soft.sets.ParameterSet`
            Column labels.
        """

        return self._col_labels

    @property
    def shape(self) -> Tuple[int, int]:
        """
        Getter property for the matrix shape, i.e., *(m, n)*.

        Returns
        -------
        :class:`tuple`
            Matrix shape.
        """

        return len(self._row_labels), len(self._col_labels)

    @property
    def T(self) -> NDArrayFloat:
        """
        Getter property for the truth-memberships :math:`T_{ij}`.

        Returns
        -------
        :class:`numpy.ndarray`
            Truth-memberships.
        """

        return self._cells[..., 0]

    @property
    def I(self) -> NDArrayFloat:  # noqa: E743
        """
        Getter property for the indeterminacy-memberships :math:`I_{ij}`.

        Returns
        -------
        :class:`numpy.ndarray`
            Indeterminacy-memberships.
        """

        return self._cells[..., 1]

    @property
    def F(self) -> NDArrayFloat:
        """
        Getter property for the falsity-memberships :math:`F_{ij}`.

        Returns
        -------
        :class:`numpy.ndarray`
            Falsity-memberships.
        """

        return self._cells[..., 2]

    def __getitem__(self, index: Tuple[int, int]) -> NsValue:
        """
        Return the cell at given 0-based *(row, column)* index.

        Parameters
        ----------
        index
            0-based *(row, column)* index.

        Returns
        -------
        :class:`neutrosophic_soft.algebra.NsValue`
            Cell.
        """

        i, j = index

        return NsValue(*self._cells[i, j])

    def __eq__(self, other: Any) -> bool:
        """Return whether the matrices have the same labels and cells."""

        if not isinstance(other, NsMatrix):
            return NotImplemented

        return (
            self._row_labels == other.row_labels
            and self._col_labels == other.col_labels
            and np.array_equal(self._cells, other.cells)
        )

    def __hash__(self) -> int:
        """Return the hash of the labels and cells."""

        return hash((self._row_labels, self._col_labels, self._cells.tobytes()))

    def __repr__(self) -> str:
        """Return a representation of the neutrosophic soft matrix."""

        m, n = self.shape

        return (
            f"NsMatrix({m}x{n}, row_labels={list(self._row_labels)}, "
            f"col_labels={list(self._col_labels)})"
        )

    def __str__(self) -> str:
        """
        Return a bracketed, column aligned, rendering of the matrix, one row
        per line.
        """

        cells = [
            [f"({T:g}, {I:g}, {F:g})" for T, I, F in row]  # noqa: E741
            for row in self._cells.tolist()
        ]
        widths = [max(len(row[j]) for row in cells) for j in range(self.shape[1])]

        return "\n".join(
            "["
            + " ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
            + "]"
            for row in cells
        )


class ShapeReport(
    namedtuple(
        "ShapeReport",
        (
            "is_row",
            "is_column",
            "is_square",
            "is_diagonal",
            "is_symmetric",
            "is_zero",
            "is_universal",
        ),
    )
):
    """
    Define the shape classification of a neutrosophic soft matrix.

    Parameters
    ----------
    is_row
        Whether the matrix has a single row.
    is_column
        Whether the matrix has a single column.
    is_square
        Whether the matrix has as many rows as columns.
    is_diagonal
        Whether the matrix is square with every non-diagonal cell equal to the
        zero value :math:`(0, 1, 1)`.
    is_symmetric
        Whether the matrix is square and equal to its transpose.
    is_zero
        Whether every cell is the zero value :math:`(0, 1, 1)`.
    is_universal
        Whether every cell is the universal value :math:`(1, 0, 0)`.
    """


def from_soft_set(N: NsSoftSet) -> NsMatrix:
    """
    Return the neutrosophic soft matrix of given neutrosophic soft set.

    Parameters
    ----------
    N
        Neutrosophic soft set.

    Returns
    -------
    :class:`neutrosophic_soft.matrices.NsMatrix`
        Neutrosophic soft matrix with the universe objects as rows and the
        parameters as columns.

    Examples
    --------
    >>> N = NsSoftSet.from_mapping({"x_1": {"u_1": (0.7, 0.6, 0.7)}})
    >>> from_soft_set(N)[0, 0]
    NsValue(T=0.7, I=0.6, F=0.7)
    """

    return NsMatrix(N.grid, N.universe, N.parameters)


def to_soft_set(M: NsMatrix) -> NsSoftSet:
    """
    Return the neutrosophic soft set of given neutrosophic soft matrix.

    Parameters
    ----------
    M
        Neutrosophic soft matrix.

    Returns
    -------
    :class:`neutrosophic_soft.sets.NsSoftSet`
        Neutrosophic soft set.
    """

    return NsSoftSet(M.row_labels, M.col_labels, M.cells)


def transpose(M: NsMatrix) -> NsMatrix:
    """
    Return the transpose of given neutrosophic soft matrix, i.e., the matrix
    obtained by interchanging its rows and columns, labels included.

    Parameters
    ----------
    M
        :math:`m \\times n` neutrosophic soft matrix.

    Returns
    -------
    :class:`neutrosophic_soft.matrices.NsMatrix`
        :math:`n \\times m` neutrosophic soft matrix.

    Notes
    -----
    -   Rectangular matrices are supported.

    Examples
    --------
    >>> M = NsMatrix([[(0.7, 0.6, 0.7), (0.5, 0.7, 0.8)]])
    >>> transpose(M)[1, 0]
    NsValue(T=0.5, I=0.7, F=0.8)
    """

    return NsMatrix._from_grid(
        np.transpose(M.cells, (1, 0, 2)),
        Universe(M.col_labels),
        ParameterSet(M.row_labels),
    )


def _is_filled_with(grid: NDArrayFloat, value: Sequence[float]) -> NDArrayFloat:
    """Return whether each cell of given grid equals given value."""

    return np.all(grid == np.asarray(value, dtype=np.float64), axis=-1)


def classify(M: NsMatrix) -> ShapeReport:
    """
    Classify the shape of given neutrosophic soft matrix.

    Parameters
    ----------
    M
        Neutrosophic soft matrix.

    Returns
    -------
    :class:`neutrosophic_soft.matrices.ShapeReport`
        Shape classification.

    Examples
    --------
    >>> report = classify(zero_matrix(["u_1"], ["x_1", "x_2"]))
    >>> report.is_row, report.is_square, report.is_zero
    (True, False, True)
    """

    m, n = M.shape
    is_square = m == n

    is_zero_cell = _is_filled_with(M.cells, ZERO_VALUE)
    is_diagonal = is_square and bool(np.all(is_zero_cell[~np.eye(m, dtype=bool)]))
    is_symmetric = is_square and bool(
        np.array_equal(M.cells, np.transpose(M.cells, (1, 0, 2)))
    )

    return ShapeReport(
        is_row=m == 1,
        is_column=n == 1,
        is_square=is_square,
        is_diagonal=is_diagonal,
        is_symmetric=is_symmetric,
        is_zero=bool(np.all(is_zero_cell)),
        is_universal=bool(np.all(_is_filled_with(M.cells, UNIVERSAL_VALUE))),
    )


def _check_compatible(A: NsMatrix, B: NsMatrix) -> None:
    """Check that given neutrosophic soft matrices share their labels."""

    check_labels_match(A.row_labels, B.row_labels, "row labels")
    check_labels_match(A.col_labels, B.col_labels, "column labels")


def mat_union(A: NsMatrix, B: NsMatrix) -> NsMatrix:
    """
    Return the union of given neutrosophic soft matrices, i.e., cellwise
    :math:`(max(T^a, T^b), min(I^a, I^b), min(F^a, F^b))`.

    Parameters
    ----------
    A
        First neutrosophic soft matrix.
    B
        Second neutrosophic soft matrix.

    Returns
    -------
    :class:`neutrosophic_soft.matrices.NsMatrix`
        Union.

    Raises
    ------
    ShapeMismatchError
        If the matrices do not share their labels.
    """

    _check_compatible(A, B)

    return NsMatrix._from_grid(
        tstack(
            [np.maximum(A.T, B.T), np.minimum(A.I, B.I), np.minimum(A.F, B.F)]
        ),
        A.row_labels,
        A.col_labels,
    )


def mat_intersection(A: NsMatrix, B: NsMatrix) -> NsMatrix:
    """
    Return the intersection of given neutrosophic soft matrices, i.e.,
    cellwise :math:`(min(T^a, T^b), max(I^a, I^b), max(F^a, F^b))`.

    Parameters
    ----------
    A
        First neutrosophic soft matrix.
    B
        Second neutrosophic soft matrix.

    Returns
    -------
    :class:`neutrosophic_soft.matrices.NsMatrix`
        Intersection.

    Raises
    ------
    ShapeMismatchError
        If the matrices do not share their labels.
    """

    _check_compatible(A, B)

    return NsMatrix._from_grid(
        tstack(
            [np.minimum(A.T, B.T), np.maximum(A.I, B.I), np.maximum(A.F, B.F)]
        ),
        A.row_labels,
        A.col_labels,
    )


def mat_complement(A: NsMatrix) -> NsMatrix:
    """
    Return the complement of given neutrosophic soft matrix, i.e., cellwise
    :math:`(F, 1 - I, T)`.

    Examples
    --------
    >>> mat_complement(NsMatrix([[(0.3, 0.1, 0.4)]]))[0, 0]
    NsValue(T=0.4, I=0.9, F=0.3)
    """

    T, I, F = tsplit(A.cells)  # noqa: E741

    return NsMatrix._from_grid(tstack([F, 1 - I, T]), A.row_labels, A.col_labels)


def mat_subset(A: NsMatrix, B: NsMatrix) -> bool:
    """
    Return whether the first neutrosophic soft matrix is a submatrix of the
    second one, i.e., cellwise :math:`T^a \\leq T^b`, :math:`I^a \\geq I^b`
    and :math:`F^a \\geq F^b`.

    Parameters
    ----------
    A
        First neutrosophic soft matrix.
    B
        Second neutrosophic soft matrix.

    Returns
    -------
    :class:`bool`
        Whether the first matrix is a submatrix of the second one.

    Raises
    ------
    ShapeMismatchError
        If the matrices do not share their labels.
    """

    _check_compatible(A, B)

    return bool(np.all(A.T <= B.T) and np.all(A.I >= B.I) and np.all(A.F >= B.F))


def mat_proper_subset(A: NsMatrix, B: NsMatrix) -> bool:
    """
    Return whether the first neutrosophic soft matrix is a proper submatrix of
    the second one, i.e., a submatrix differing in at least one cell
    component.

    Raises
    ------
    ShapeMismatchError
        If the matrices do not share their labels.
    """

    return mat_subset(A, B) and not np.array_equal(A.cells, B.cells)


def mat_equal(A: NsMatrix, B: NsMatrix) -> bool:
    """
    Return whether given neutrosophic soft matrices are cellwise equal.

    Raises
    ------
    ShapeMismatchError
        If the matrices do not share their labels.
    """

    _check_compatible(A, B)

    return bool(np.array_equal(A.cells, B.cells))


def mat_disjoint(A: NsMatrix, B: NsMatrix) -> bool:
    """
    Return whether given neutrosophic soft matrices are disjoint, i.e., their
    intersection is the zero matrix.

    Raises
    ------
    ShapeMismatchError
        If the matrices do not share their labels.
    """

    return classify(mat_intersection(A, B)).is_zero


def _filled_matrix(
    value: Sequence[float],
    row_labels: Sequence[str],
    col_labels: Sequence[str],
) -> NsMatrix:
    """Return a matrix with every cell set to given value."""

    row_labels = Universe(row_labels)
    col_labels = ParameterSet(col_labels)

    return NsMatrix._from_grid(
        np.tile(
            np.asarray(value, dtype=np.float64), (len(row_labels), len(col_labels), 1)
        ),
        row_labels,
        col_labels,
    )


def zero_matrix(row_labels: Sequence[str], col_labels: Sequence[str]) -> NsMatrix:
    """
    Return the zero matrix, i.e., every cell is :math:`(0, 1, 1)`, for given
    labels.

    Examples
    --------
    >>> print(zero_matrix(["u_1", "u_2"], ["x_1"]))
    [(0, 1, 1)]
    [(0, 1, 1)]
    """

    return _filled_matrix(ZERO_VALUE, row_labels, col_labels)


def universal_matrix(
    row_labels: Sequence[str], col_labels: Sequence[str]
) -> NsMatrix:
    """
    Return the universal matrix, i.e., every cell is :math:`(1, 0, 0)`, for
    given labels.
    """

    return _filled_matrix(UNIVERSAL_VALUE, row_labels, col_labels)


def random_matrix(
    m: int,
    n: int,
    random_state: int | np.random.Generator | None = None,
    decimals: int | None = None,
) -> NsMatrix:
    """
    Return a random :math:`m \\times n` neutrosophic soft matrix with default
    labels.

    Parameters
    ----------
    m
        Rows count.
    n
        Columns count.
    random_state
        Seed or generator passed to :func:`numpy.random.default_rng`.
    decimals
        Decimals the components are rounded to, full precision if *None*.

    Returns
    -------
    :class:`neutrosophic_soft.matrices.NsMatrix`
        Random neutrosophic soft matrix.
    """

    cells = np.random.default_rng(random_state).uniform(0, 1, (m, n, 3))

    if decimals is not None:
        cells = np.round(cells, decimals)

    return NsMatrix(cells)
