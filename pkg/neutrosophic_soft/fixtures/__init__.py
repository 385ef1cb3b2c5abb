from __future__ import annotations

from colour.hints import Any
from colour.utilities import CanonicalMapping

from .abstract import ROOT_RESOURCES_FIXTURES, AbstractFixtureLoader
from .soft_set_operations import (
    FixtureLoader_SoftSetOperations,
    build_SoftSetOperations,
)
from .matrix_shapes import FixtureLoader_MatrixShapes, build_MatrixShapes
from .car_dealer import FixtureLoader_CarDealer, build_CarDealer

__all__ = [
    "ROOT_RESOURCES_FIXTURES",
    "AbstractFixtureLoader",
]
__all__ += [
    "FixtureLoader_SoftSetOperations",
    "build_SoftSetOperations",
]
__all__ += [
    "FixtureLoader_MatrixShapes",
    "build_MatrixShapes",
]
__all__ += [
    "FixtureLoader_CarDealer",
    "build_CarDealer",
]

FIXTURE_LOADERS: CanonicalMapping = CanonicalMapping(
    {
        FixtureLoader_SoftSetOperations.ID: build_SoftSetOperations,
        FixtureLoader_MatrixShapes.ID: build_MatrixShapes,
        FixtureLoader_CarDealer.ID: build_CarDealer,
    }
)
FIXTURE_LOADERS.__doc__ = """
Fixture loaders ids and callables.
"""

FIXTURE_TITLES: CanonicalMapping = CanonicalMapping(
    {
        FixtureLoader_SoftSetOperations.TITLE: FixtureLoader_SoftSetOperations.ID,
        FixtureLoader_MatrixShapes.TITLE: FixtureLoader_MatrixShapes.ID,
        FixtureLoader_CarDealer.TITLE: FixtureLoader_CarDealer.ID,
    }
)
FIXTURE_TITLES.__doc__ = """
Fixture titles and ids.
"""


def load(fixture: str) -> Any:
    """
    Load given fixture.

    Parameters
    ----------
    fixture
        Fixture id, the fixture title is also accepted.

    Returns
    -------
    :class:`object`
        Fixture content.

    Examples
    --------
    >>> sorted(load("car-dealer"))
    ['A', 'B']
    >>> sorted(load("Car Dealer"))
    ['A', 'B']
    """

    fixture_loader = FIXTURE_LOADERS[FIXTURE_TITLES.get(fixture, fixture)]()

    if fixture_loader.content is None:
        fixture_loader.load()

    return fixture_loader.content


__all__ += [
    "FIXTURE_LOADERS",
    "FIXTURE_TITLES",
    "load",
]
