"""
Define the unit tests for the
:mod:`neutrosophic_soft.fixtures.soft_set_operations` module.
"""

from __future__ import annotations

from neutrosophic_soft.algebra import NsValue
from neutrosophic_soft.fixtures import (
    FixtureLoader_SoftSetOperations,
    build_SoftSetOperations,
)
from neutrosophic_soft.sets import NsSoftSet, set_union

__author__ = "Neutrosophic Soft Developers"
__copyright__ = "Copyright 2026 Neutrosophic Soft Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Neutrosophic Soft Developers"
__status__ = "Production"

__all__ = [
    "TestFixtureLoader_SoftSetOperations",
    "TestBuildSoftSetOperations",
]


class TestFixtureLoader_SoftSetOperations:
    """
    Define :class:`neutrosophic_soft.fixtures.soft_set_operations.\
FixtureLoader_SoftSetOperations` class unit tests methods.
    """

    def test_required_attributes(self):
        """Test the presence of required attributes."""

        required_attributes = ("ID", "TITLE", "FILES")

        for attribute in required_attributes:
            assert attribute in dir(FixtureLoader_SoftSetOperations)

    def test_required_methods(self):
        """Test the presence of required methods."""

        required_methods = ("__init__", "load")

        for method in required_methods:
            assert method in dir(FixtureLoader_SoftSetOperations)

    def test_load(self):
        """
        Test :func:`neutrosophic_soft.fixtures.soft_set_operations.\
FixtureLoader_SoftSetOperations.load` method.
        """

        fixture = FixtureLoader_SoftSetOperations()
        content = fixture.load()

        assert sorted(content) == ["N_1", "N_2"]
        assert content is fixture.content

        N_1, N_2 = content["N_1"], content["N_2"]

        assert isinstance(N_1, NsSoftSet)
        assert N_1.universe == ("u_1", "u_2", "u_3", "u_4")
        assert N_1.parameters == ("x_1", "x_2", "x_3")
        assert N_1.valuation("x_2", "u_4") == NsValue(0.4, 0.5, 0.5)
        assert N_2.valuation("x_2", "u_4") == NsValue(0.5, 0.8, 0.5)
        assert set_union(N_1, N_2).valuation("x_2", "u_4") == NsValue(0.5, 0.5, 0.5)


class TestBuildSoftSetOperations:
    """
    Define :func:`neutrosophic_soft.fixtures.soft_set_operations.\
build_SoftSetOperations` definition unit tests methods.
    """

    def test_build_SoftSetOperations(self):
        """
        Test :func:`neutrosophic_soft.fixtures.soft_set_operations.\
build_SoftSetOperations` definition.
        """

        assert build_SoftSetOperations() is build_SoftSetOperations()
