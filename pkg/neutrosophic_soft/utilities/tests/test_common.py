"""Define the unit tests for the :mod:`neutrosophic_soft.utilities.common` module."""

from __future__ import annotations

import os
import shutil
import tempfile

import pytest

from neutrosophic_soft.utilities import (
    MalformedDocumentError,
    ShapeMismatchError,
    ValidationError,
    check_labels_match,
    default_labels,
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
    "TestDefaultLabels",
    "TestCheckLabelsMatch",
    "TestJsonDecode",
    "TestJsonRead",
    "TestRoundNumber",
    "TestFormatNumber",
]


class TestDefaultLabels:
    """
    Define :func:`neutrosophic_soft.utilities.common.default_labels` definition
    unit tests methods.
    """

    def test_default_labels(self):
        """Test :func:`neutrosophic_soft.utilities.common.default_labels` definition."""

        assert default_labels("x", 2) == ("x_1", "x_2")
        assert default_labels("u", 0) == ()


class TestCheckLabelsMatch:
    """
    Define :func:`neutrosophic_soft.utilities.common.check_labels_match`
    definition unit tests methods.
    """

    def test_raise_exception_check_labels_match(self):
        """
        Test :func:`neutrosophic_soft.utilities.common.check_labels_match`
        definition raised exception.
        """

        check_labels_match(["u_1", "u_2"], ("u_1", "u_2"))

        pytest.raises(
            ShapeMismatchError,
            lambda: check_labels_match(("u_1", "u_2"), ("u_2", "u_1")),
        )
        pytest.raises(
            ShapeMismatchError,
            lambda: check_labels_match(("u_1",), ("u_1", "u_2")),
        )

        with pytest.raises(ShapeMismatchError) as error:
            check_labels_match(("x_1",), ("x_2",), "parameter sets")

        assert "parameter sets" in str(error.value)


class TestJsonDecode:
    """
    Define :func:`neutrosophic_soft.utilities.common.json_decode` definition
    unit tests methods.
    """

    def test_json_decode(self):
        """Test :func:`neutrosophic_soft.utilities.common.json_decode` definition."""

        assert json_decode("[0.5, 1, 0]") == [0.5, 1, 0]

    def test_raise_exception_json_decode(self):
        """
        Test :func:`neutrosophic_soft.utilities.common.json_decode` definition
        raised exception.
        """

        for text in ("", "[0.5,", "[NaN]", "[-Infinity]", "{'a': 1}"):
            pytest.raises(MalformedDocumentError, lambda text=text: json_decode(text))

        with pytest.raises(MalformedDocumentError) as error:
            json_decode("[1,\n 2", "a.json")

        assert '"a.json"' in str(error.value)
        assert isinstance(error.value, ValidationError)


class TestJsonRead:
    """
    Define :func:`neutrosophic_soft.utilities.common.json_read` definition unit
    tests methods.
    """

    def setup_method(self):
        """Initialise the common tests attributes."""

        self._temporary_directory = tempfile.mkdtemp()

    def teardown_method(self):
        """After tests actions."""

        shutil.rmtree(self._temporary_directory)

    def test_json_read(self):
        """Test :func:`neutrosophic_soft.utilities.common.json_read` definition."""

        path = os.path.join(self._temporary_directory, "document.json")

        with open(path, "w", encoding="utf-8") as json_file:
            json_file.write('{"parameters": ["e_1∧e_2"]}')

        assert json_read(path) == {"parameters": ["e_1∧e_2"]}

    def test_raise_exception_json_read(self):
        """
        Test :func:`neutrosophic_soft.utilities.common.json_read` definition
        raised exception.
        """

        pytest.raises(
            MalformedDocumentError,
            lambda: json_read(os.path.join(self._temporary_directory, "missing.json")),
        )

        path = os.path.join(self._temporary_directory, "binary.json")

        with open(path, "wb") as binary_file:
            binary_file.write(b"\xff\xfe\x00")

        pytest.raises(MalformedDocumentError, lambda: json_read(path))


class TestRoundNumber:
    """
    Define :func:`neutrosophic_soft.utilities.common.round_number` definition
    unit tests methods.
    """

    def test_round_number(self):
        """Test :func:`neutrosophic_soft.utilities.common.round_number` definition."""

        assert round_number(1 - 0.8, 4) == 0.2
        assert round_number(0.123456789) == 0.123456789
        assert round_number(1, 2) == 1.0
        assert isinstance(round_number(1, 2), float)

    def test_negative_zero(self):
        """Test that rounding never yields a negative zero."""

        assert str(round_number(-0.00001, 2)) == "0.0"


class TestFormatNumber:
    """
    Define :func:`neutrosophic_soft.utilities.common.format_number` definition
    unit tests methods.
    """

    def test_format_number(self):
        """Test :func:`neutrosophic_soft.utilities.common.format_number` definition."""

        assert format_number(0.93, 4) == "0.9300"
        assert format_number(-1, 2) == "-1.00"
        assert format_number(1, 0) == "1"
        assert format_number(-0.00001, 3) == "0.000"
