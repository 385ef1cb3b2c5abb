"""
Abstract Fixture Loader
=======================

Define the abstract class implementing support for the bundled fixtures
loading:

-   :attr:`neutrosophic_soft.fixtures.ROOT_RESOURCES_FIXTURES`
-   :class:`neutrosophic_soft.fixtures.AbstractFixtureLoader`
"""

from __future__ import annotations

import os
from abc import ABC, abstractmethod

from colour.hints import Any, Tuple

__author__ = "Neutrosophic Soft Developers"
__copyright__ = "Copyright 2026 Neutrosophic Soft Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Neutrosophic Soft Developers"
__status__ = "Production"

__all__ = [
    "ROOT_RESOURCES_FIXTURES",
    "AbstractFixtureLoader",
]

ROOT_RESOURCES_FIXTURES: str = os.path.join(os.path.dirname(__file__), "resources")
"""Directory of the bundled fixtures matrix documents."""


class AbstractFixtureLoader(ABC):
    """
    Define the base class for a fixture loader.

    This is an :class:`ABCMeta` abstract class that must be inherited by
    sub-classes.

    The sub-classes are expected to implement the
    :meth:`neutrosophic_soft.fixtures.AbstractFixtureLoader.load` method that
    reads and converts the fixture matrix documents and returns them as
    *Python* objects.

    Attributes
    ----------
    -   :attr:`neutrosophic_soft.fixtures.AbstractFixtureLoader.ID`
    -   :attr:`neutrosophic_soft.fixtures.AbstractFixtureLoader.TITLE`
    -   :attr:`neutrosophic_soft.fixtures.AbstractFixtureLoader.FILES`
    -   :attr:`neutrosophic_soft.fixtures.AbstractFixtureLoader.id`
    -   :attr:`neutrosophic_soft.fixtures.AbstractFixtureLoader.content`

    Methods
    -------
    -   :meth:`neutrosophic_soft.fixtures.AbstractFixtureLoader.__init__`
    -   :meth:`neutrosophic_soft.fixtures.AbstractFixtureLoader.path`
    -   :meth:`neutrosophic_soft.fixtures.AbstractFixtureLoader.load`
    """

    ID: str = "Undefined"
    """Fixture id."""

    TITLE: str = "Undefined"
    """Fixture title."""

    FILES: Tuple[str, ...] = ()
    """Matrix documents of the fixture."""

    def __init__(self) -> None:
        self._content: Any | None = None

    @property
    def id(self) -> str:
        """
        Getter property for the fixture id.

        Returns
        -------
        :class:`str`
            Fixture id.
        """

        return self.__class__.ID

    @property
    def content(self) -> Any:
        """
        Getter property for the fixture content.

        Returns
        -------
        :class:`object`
           Fixture content.
        """

        return self._content

    def path(self, filename: str) -> str:
        """
        Return the path of given matrix document of the fixture.

        Parameters
        ----------
        filename
            Matrix document filename.

        Returns
        -------
        :class:`str`
            Matrix document path.
        """

        return os.path.join(ROOT_RESOURCES_FIXTURES, filename)

    @abstractmethod
    def load(self) -> Any:
        """
        Read, convert and return the fixture content as a *Python* object.

        Returns
        -------
        :class:`object`
            Fixture content as a *Python* object.
        """
