"""Define the unit tests for the :mod:`neutrosophic_soft.fixtures.abstract` module."""

from __future__ import annotations

import os

import pytest

from neutrosophic_soft.fixtures import (
    FIXTURE_LOADERS,
    FIXTURE_TITLES,
    ROOT_RESOURCES_FIXTURES,
    AbstractFixtureLoader,
    car_dealer,
    load,
)

__author__ = "Neutrosophic Soft Developers"
__copyright__ = "Copyright 2026 Neutrosophic Soft Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Neutrosophic Soft Developers"
__status__ = "Production"

__all__ = [
    "TestAbstractFixtureLoader",
    "TestLoad",
]


class TestAbstractFixtureLoader:
    """
    Define :class:`neutrosophic_soft.fixtures.abstract.AbstractFixtureLoader`
    class unit tests methods.
    """

    def test_required_attributes(self):
        """Test the presence of required attributes."""

        required_attributes = ("ID", "TITLE", "FILES", "id", "content")

        for attribute in required_attributes:
            assert attribute in dir(AbstractFixtureLoader)

    def test_required_methods(self):
        """Test the presence of required methods."""

        required_methods = ("__init__", "path", "load")

        for method in required_methods:
            assert method in dir(AbstractFixtureLoader)

    def test_raise_exception_AbstractFixtureLoader(self):
        """
        Test :class:`neutrosophic_soft.fixtures.abstract.AbstractFixtureLoader`
        class raised exception.
        """

        pytest.raises(TypeError, AbstractFixtureLoader)

    def test_files(self):
        """Test that the declared matrix documents are bundled."""

        filenames = []
        for key in FIXTURE_LOADERS:
            loader = FIXTURE_LOADERS[key](load=False)

            for filename in loader.FILES:
                assert os.path.isfile(loader.path(filename))

            filenames.extend(loader.FILES)

        assert len(filenames) == len(set(filenames))
        assert sorted(filenames) == sorted(
            filename
            for filename in os.listdir(ROOT_RESOURCES_FIXTURES)
            if filename.endswith(".json")
        )


class TestLoad:
    """
    Define :func:`neutrosophic_soft.fixtures.load` definition unit tests
    methods.
    """

    def setup_method(self):
        """Initialise the common tests attributes."""

        self._fixture_loader = car_dealer._FIXTURE_LOADER_CAR_DEALER

    def teardown_method(self):
        """After tests actions."""

        car_dealer._FIXTURE_LOADER_CAR_DEALER = self._fixture_loader

    def test_load(self):
        """Test :func:`neutrosophic_soft.fixtures.load` definition."""

        assert sorted(load("soft-set-operations")) == ["N_1", "N_2"]
        assert sorted(load("Soft Set Operations")) == ["N_1", "N_2"]
        assert "diagonal" in load("matrix-shapes")
        assert load("car-dealer") is load("Car Dealer")

    def test_raise_exception_load(self):
        """
        Test :func:`neutrosophic_soft.fixtures.load` definition raised
        exception.
        """

        pytest.raises(KeyError, lambda: load("hotel-booking"))

    def test_load_unloaded_fixture(self):
        """
        Test :func:`neutrosophic_soft.fixtures.load` definition with a fixture
        loader built without loading its content.
        """

        car_dealer._FIXTURE_LOADER_CAR_DEALER = None

        assert car_dealer.build_CarDealer(load=False).content is None
        assert sorted(load("car-dealer")) == ["A", "B"]
        assert car_dealer.build_CarDealer(load=False).content is not None

        car_dealer._FIXTURE_LOADER_CAR_DEALER = None
        car_dealer.build_CarDealer(load=False)

        assert sorted(car_dealer.build_CarDealer().content) == ["A", "B"]

    def test_load_titles(self):
        """
        Test :func:`neutrosophic_soft.fixtures.load` definition with the
        fixtures titles.
        """

        for title, fixture in FIXTURE_TITLES.items():
            assert FIXTURE_LOADERS[fixture]().TITLE == title
            assert load(title) is load(fixture)
