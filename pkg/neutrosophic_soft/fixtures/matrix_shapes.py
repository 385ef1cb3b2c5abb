"""
Matrix Shapes
=============

Define the objects implementing support for the matrix shapes fixture
loading:

-   :class:`neutrosophic_soft.fixtures.FixtureLoader_MatrixShapes`
-   :func:`neutrosophic_soft.fixtures.build_MatrixShapes`
"""

from __future__ import annotations

import os

from colour.hints import Dict

from neutrosophic_soft.fixtures.abstract import AbstractFixtureLoader
from neutrosophic_soft.io import read_matrix
from neutrosophic_soft.matrices import NsMatrix

__author__ = "Neutrosophic Soft Developers"
__copyright__ = "Copyright 2026 Neutrosophic Soft Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Neutrosophic Soft Developers"
__status__ = "Production"

__all__ = [
    "FixtureLoader_MatrixShapes",
    "build_MatrixShapes",
]


class FixtureLoader_MatrixShapes(AbstractFixtureLoader):
    """
    Define the matrix shapes fixture loader, one matrix per shape: square,
    row, column, diagonal, symmetric, zero and universal.

    Attributes
    ----------
    -   :attr:`neutrosophic_soft.fixtures.FixtureLoader_MatrixShapes.ID`

    Methods
    -------
    -   :meth:`neutrosophic_soft.fixtures.FixtureLoader_MatrixShapes.load`
    """

    ID: str = "matrix-shapes"
    """Fixture id."""

    TITLE: str = "Matrix Shapes"
    """Fixture title."""

    FILES: tuple = (
        "matrix_square.json",
        "matrix_row.json",
        "matrix_column.json",
        "matrix_diagonal.json",
        "matrix_symmetric.json",
        "matrix_zero.json",
        "matrix_universal.json",
    )
    """Matrix documents of the fixture."""

    def load(self) -> Dict[str, NsMatrix]:
        """
        Read, convert and return the matrix shapes fixture content.

        Returns
        -------
        :class:`dict`
            Neutrosophic soft matrices keyed by shape.

        Examples
        --------
        >>> fixture = FixtureLoader_MatrixShapes()
        >>> sorted(fixture.load())  # doctest: +NORMALIZE_WHITESPACE
        ['column', 'diagonal', 'row', 'square', 'symmetric', 'universal',
         'zero']
        """

        self._content = {
            os.path.splitext(filename)[0].replace("matrix_", "", 1): read_matrix(
                self.path(filename)
            )
            for filename in self.FILES
        }

        return self._content


_FIXTURE_LOADER_MATRIX_SHAPES: FixtureLoader_MatrixShapes | None = None
"""Singleton instance of the matrix shapes fixture loader."""


def build_MatrixShapes(load: bool = True) -> FixtureLoader_MatrixShapes:
    """
    Singleton factory that builds the matrix shapes fixture loader.

    Parameters
    ----------
    load
        Whether to load the fixture upon instantiation.

    Returns
    -------
    :class:`neutrosophic_soft.fixtures.FixtureLoader_MatrixShapes`
        Singleton instance of the matrix shapes fixture loader.
    """

    global _FIXTURE_LOADER_MATRIX_SHAPES  # noqa: PLW0603

    if _FIXTURE_LOADER_MATRIX_SHAPES is None:
        _FIXTURE_LOADER_MATRIX_SHAPES = FixtureLoader_MatrixShapes()

    if load and _FIXTURE_LOADER_MATRIX_SHAPES.content is None:
        _FIXTURE_LOADER_MATRIX_SHAPES.load()

    return _FIXTURE_LOADER_MATRIX_SHAPES
