"""
Define the unit tests for the :mod:`neutrosophic_soft.fixtures.matrix_shapes`
module.
"""

from __future__ import annotations

from neutrosophic_soft.fixtures import FixtureLoader_MatrixShapes, build_MatrixShapes
from neutrosophic_soft.matrices import classify

__author__ = "Neutrosophic Soft Developers"
__copyright__ = "Copyright 2026 Neutrosophic Soft Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Neutrosophic Soft Developers"
__status__ = "Production"

__all__ = [
    "TestFixtureLoader_MatrixShapes",
    "TestBuildMatrixShapes",
]


class TestFixtureLoader_MatrixShapes:
    """
    Define :class:`neutrosophic_soft.fixtures.matrix_shapes.\
FixtureLoader_MatrixShapes` class unit tests methods.
    """

    def test_required_attributes(self):
        """Test the presence of required attributes."""

        required_attributes = ("ID", "TITLE", "FILES")

        for attribute in required_attributes:
            assert attribute in dir(FixtureLoader_MatrixShapes)

    def test_required_methods(self):
        """Test the presence of required methods."""

        required_methods = ("__init__", "load")

        for method in required_methods:
            assert method in dir(FixtureLoader_MatrixShapes)

    def test_load(self):
        """
        Test :func:`neutrosophic_soft.fixtures.matrix_shapes.\
FixtureLoader_MatrixShapes.load` method.
        """

        content = FixtureLoader_MatrixShapes().load()

        assert sorted(content) == [
            "column",
            "diagonal",
            "row",
            "square",
            "symmetric",
            "universal",
            "zero",
        ]

        assert content["square"].shape == (3, 3)
        assert content["row"].shape == (1, 3)
        assert content["column"].shape == (4, 1)

        for shape, matrix in content.items():
            assert getattr(classify(matrix), f"is_{shape}"), shape

        assert not classify(content["square"]).is_symmetric
        assert not classify(content["symmetric"]).is_diagonal


class TestBuildMatrixShapes:
    """
    Define :func:`neutrosophic_soft.fixtures.matrix_shapes.build_MatrixShapes`
    definition unit tests methods.
    """

    def test_build_MatrixShapes(self):
        """
        Test :func:`neutrosophic_soft.fixtures.matrix_shapes.build_MatrixShapes`
        definition.
        """

        assert build_MatrixShapes() is build_MatrixShapes()
