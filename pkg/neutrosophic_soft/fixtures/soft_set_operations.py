"""
Soft Set Operations
===================

Define the objects implementing support for the soft set operations fixture
loading:

-   :class:`neutrosophic_soft.fixtures.FixtureLoader_SoftSetOperations`
-   :func:`neutrosophic_soft.fixtures.build_SoftSetOperations`

The fixture holds two neutrosophic soft sets :math:`N_1` and :math:`N_2` over
four objects and three parameters, operands of the union, intersection and
complement examples.
"""

from __future__ import annotations

from colour.hints import Dict

from neutrosophic_soft.fixtures.abstract import AbstractFixtureLoader
from neutrosophic_soft.io import read_matrix
from neutrosophic_soft.matrices import to_soft_set
from neutrosophic_soft.sets import NsSoftSet

__author__ = "Neutrosophic Soft Developers"
__copyright__ = "Copyright 2026 Neutrosophic Soft Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Neutrosophic Soft Developers"
__status__ = "Production"

__all__ = [
    "FixtureLoader_SoftSetOperations",
    "build_SoftSetOperations",
]


class FixtureLoader_SoftSetOperations(AbstractFixtureLoader):
    """
    Define the soft set operations fixture loader.

    Attributes
    ----------
    -   :attr:`neutrosophic_soft.fixtures.FixtureLoader_SoftSetOperations.ID`

    Methods
    -------
    -   :meth:`neutrosophic_soft.fixtures.FixtureLoader_SoftSetOperations.load`
    """

    ID: str = "soft-set-operations"
    """Fixture id."""

    TITLE: str = "Soft Set Operations"
    """Fixture title."""

    FILES: tuple = ("soft_set_n1.json", "soft_set_n2.json")
    """Matrix documents of the fixture."""

    def load(self) -> Dict[str, NsSoftSet]:
        """
        Read, convert and return the soft set operations fixture content.

        Returns
        -------
        :class:`dict`
            Neutrosophic soft sets :math:`N_1` and :math:`N_2`.

        Examples
        --------
        >>> fixture = FixtureLoader_SoftSetOperations()
        >>> fixture.load()["N_1"].valuation("x_1", "u_3")
        NsValue(T=0.3, I=0.1, F=0.4)
        """

        self._content = {
            f"N_{i}": to_soft_set(read_matrix(self.path(filename)))
            for i, filename in enumerate(self.FILES, 1)
        }

        return self._content


_FIXTURE_LOADER_SOFT_SET_OPERATIONS: FixtureLoader_SoftSetOperations | None = None
"""Singleton instance of the soft set operations fixture loader."""


def build_SoftSetOperations(load: bool = True) -> FixtureLoader_SoftSetOperations:
    """
    Singleton factory that builds the soft set operations fixture loader.

    Parameters
    ----------
    load
        Whether to load the fixture upon instantiation.

    Returns
    -------
    :class:`neutrosophic_soft.fixtures.FixtureLoader_SoftSetOperations`
        Singleton instance of the soft set operations fixture loader.
    """

    global _FIXTURE_LOADER_SOFT_SET_OPERATIONS  # noqa: PLW0603

    if _FIXTURE_LOADER_SOFT_SET_OPERATIONS is None:
        _FIXTURE_LOADER_SOFT_SET_OPERATIONS = FixtureLoader_SoftSetOperations()

    if load and _FIXTURE_LOADER_SOFT_SET_OPERATIONS.content is None:
        _FIXTURE_LOADER_SOFT_SET_OPERATIONS.load()

    return _FIXTURE_LOADER_SOFT_SET_OPERATIONS
