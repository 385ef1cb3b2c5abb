"""
Car Dealer
==========

Define the objects implementing support for the car dealer decision fixture
loading:

-   :class:`neutrosophic_soft.fixtures.FixtureLoader_CarDealer`
-   :func:`neutrosophic_soft.fixtures.build_CarDealer`

A car dealer stores three cars :math:`u_1`, :math:`u_2` and :math:`u_3`
described by two parameters, :math:`e_1` being costly and :math:`e_2` being
fuel efficient. The two partners of a couple buying a car each describe the
cars with a neutrosophic soft matrix, :math:`A` and :math:`B`.
"""

from __future__ import annotations

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
    "FixtureLoader_CarDealer",
    "build_CarDealer",
]


class FixtureLoader_CarDealer(AbstractFixtureLoader):
    """
    Define the car dealer decision fixture loader.

    Attributes
    ----------
    -   :attr:`neutrosophic_soft.fixtures.FixtureLoader_CarDealer.ID`

    Methods
    -------
    -   :meth:`neutrosophic_soft.fixtures.FixtureLoader_CarDealer.load`
    """

    ID: str = "car-dealer"
    """Fixture id."""

    TITLE: str = "Car Dealer"
    """Fixture title."""

    FILES: tuple = ("case_study_a.json", "case_study_b.json")
    """Matrix documents of the fixture."""

    def load(self) -> Dict[str, NsMatrix]:
        """
        Read, convert and return the car dealer fixture content.

        Returns
        -------
        :class:`dict`
            Neutrosophic soft matrices :math:`A` and :math:`B` of the partners.

        Examples
        --------
        >>> fixture = FixtureLoader_CarDealer()
        >>> fixture.load()["A"][0, 0]
        NsValue(T=1.0, I=0.1, F=0.1)
        """

        self._content = {
            name: read_matrix(self.path(filename))
            for name, filename in zip(("A", "B"), self.FILES)
        }

        return self._content


_FIXTURE_LOADER_CAR_DEALER: FixtureLoader_CarDealer | None = None
"""Singleton instance of the car dealer fixture loader."""


def build_CarDealer(load: bool = True) -> FixtureLoader_CarDealer:
    """
    Singleton factory that builds the car dealer fixture loader.

    Parameters
    ----------
    load
        Whether to load the fixture upon instantiation.

    Returns
    -------
    :class:`neutrosophic_soft.fixtures.FixtureLoader_CarDealer`
        Singleton instance of the car dealer fixture loader.
    """

    global _FIXTURE_LOADER_CAR_DEALER  # noqa: PLW0603

    if _FIXTURE_LOADER_CAR_DEALER is None:
        _FIXTURE_LOADER_CAR_DEALER = FixtureLoader_CarDealer()

    if load and _FIXTURE_LOADER_CAR_DEALER.content is None:
        _FIXTURE_LOADER_CAR_DEALER.load()

    return _FIXTURE_LOADER_CAR_DEALER
