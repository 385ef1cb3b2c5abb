"""Define the unit tests for the :mod:`neutrosophic_soft.matrices.matrix` module."""

from __future__ import annotations

import numpy as np
import pytest

from neutrosophic_soft.algebra import ZERO_VALUE, NsValue
from neutrosophic_soft.constants import TOLERANCE_ABSOLUTE_TESTS
from neutrosophic_soft.matrices import (
    NsMatrix,
    classify,
    from_soft_set,
    mat_complement,
    mat_disjoint,
    mat_equal,
    mat_intersection,
    mat_proper_subset,
    mat_subset,
    mat_union,
    random_matrix,
    to_soft_set,
    transpose,
    universal_matrix,
    zero_matrix,
)
from neutrosophic_soft.sets import NsSoftSet, ParameterSet, Universe
from neutrosophic_soft.sets.tests.test_soft_set import (
    CELLS_N_1,
    CELLS_N_2,
    PARAMETERS_EXAMPLE,
    UNIVERSE_EXAMPLE,
)
from neutrosophic_soft.utilities import (
    DimensionMismatchError,
    OutOfRangeError,
    ShapeMismatchError,
)

__author__ = "Neutrosophic Soft Developers"
__copyright__ = "Copyright 2026 Neutrosophic Soft Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Neutrosophic Soft Developers"
__status__ = "Production"

__all__ = [
    "CELLS_SQUARE",
    "CELLS_DIAGONAL",
    "CELLS_SYMMETRIC",
    "TestNsMatrix",
    "TestFromSoftSet",
    "TestTranspose",
    "TestClassify",
    "TestMatUnion",
    "TestMatIntersection",
    "TestMatComplement",
    "TestMatSubset",
    "TestMatDisjoint",
    "TestZeroMatrix",
    "TestRandomMatrix",
]

CELLS_SQUARE: list = [
    [(0.7, 0.6, 0.7), (0.5, 0.7, 0.8), (0.8, 0.6, 0.9)],
    [(0.4, 0.2, 0.8), (0.5, 0.9, 0.3), (0.5, 0.9, 0.9)],
    [(0.9, 0.1, 0.5), (0.5, 0.6, 0.8), (0.7, 0.5, 0.4)],
]

CELLS_DIAGONAL: list = [
    [(0.7, 0.6, 0.7), (0.0, 1.0, 1.0), (0.0, 1.0, 1.0)],
    [(0.0, 1.0, 1.0), (0.0, 1.0, 1.0), (0.0, 1.0, 1.0)],
    [(0.0, 1.0, 1.0), (0.0, 1.0, 1.0), (0.7, 0.5, 0.4)],
]

CELLS_SYMMETRIC: list = [
    [(0.7, 0.6, 0.7), (0.4, 0.2, 0.8), (0.9, 0.1, 0.5)],
    [(0.4, 0.2, 0.8), (0.5, 0.9, 0.3), (0.5, 0.9, 0.9)],
    [(0.9, 0.1, 0.5), (0.5, 0.9, 0.9), (0.7, 0.5, 0.4)],
]

SAMPLES_COUNT: int = 500


class TestNsMatrix:
    """
    Define :class:`neutrosophic_soft.matrices.matrix.NsMatrix` class unit tests
    methods.
    """

    def setup_method(self):
        """Initialise the common tests attributes."""

        self._matrix = NsMatrix(CELLS_N_1, UNIVERSE_EXAMPLE, PARAMETERS_EXAMPLE)

    def test_required_attributes(self):
        """Test the presence of required attributes."""

        required_attributes = (
            "cells",
            "row_labels",
            "col_labels",
            "shape",
            "T",
            "I",
            "F",
        )

        for attribute in required_attributes:
            assert attribute in dir(NsMatrix)

    def test_required_methods(self):
        """Test the presence of required methods."""

        required_methods = ("__init__", "__getitem__", "__eq__", "__str__")

        for method in required_methods:
            assert method in dir(NsMatrix)

    def test__init__(self):
        """Test :meth:`neutrosophic_soft.matrices.matrix.NsMatrix.__init__` method."""

        assert self._matrix.shape == (4, 3)
        assert isinstance(self._matrix.row_labels, Universe)
        assert isinstance(self._matrix.col_labels, ParameterSet)
        assert not self._matrix.cells.flags.writeable

        matrix = NsMatrix(CELLS_SQUARE)

        assert matrix.row_labels == ("u_1", "u_2", "u_3")
        assert matrix.col_labels == ("x_1", "x_2", "x_3")

        np.testing.assert_array_equal(self._matrix.T[0], [0.4, 0.5, 0.7])
        np.testing.assert_array_equal(self._matrix.I[:, 0], [0.5, 0.5, 0.1, 0.7])
        np.testing.assert_array_equal(self._matrix.F[3], [0.7, 0.5, 0.5])

    def test_raise_exception__init__(self):
        """
        Test :meth:`neutrosophic_soft.matrices.matrix.NsMatrix.__init__` method
        raised exception.
        """

        pytest.raises(DimensionMismatchError, lambda: NsMatrix([(0.1, 0.2, 0.3)]))

        pytest.raises(
            DimensionMismatchError,
            lambda: NsMatrix(CELLS_SQUARE, ("u_1", "u_2"), ("x_1", "x_2", "x_3")),
        )

        with pytest.raises(OutOfRangeError) as error:
            NsMatrix([[(0.1, 0.2, 0.3), (0.1, 0.2, 1.3)]])

        assert error.value.row == "u_1"
        assert error.value.column == "x_2"
        assert error.value.component == "F"

    def test__getitem__(self):
        """Test :meth:`neutrosophic_soft.matrices.matrix.NsMatrix.__getitem__` method."""

        assert self._matrix[2, 1] == NsValue(0.2, 0.6, 0.5)
        assert isinstance(self._matrix[0, 0], NsValue)

    def test__eq__(self):
        """Test :meth:`neutrosophic_soft.matrices.matrix.NsMatrix.__eq__` method."""

        assert self._matrix == NsMatrix(
            CELLS_N_1, UNIVERSE_EXAMPLE, PARAMETERS_EXAMPLE
        )
        assert hash(self._matrix) == hash(
            NsMatrix(CELLS_N_1, UNIVERSE_EXAMPLE, PARAMETERS_EXAMPLE)
        )
        assert self._matrix != NsMatrix(
            CELLS_N_2, UNIVERSE_EXAMPLE, PARAMETERS_EXAMPLE
        )
        assert self._matrix != NsMatrix(CELLS_N_1, UNIVERSE_EXAMPLE, ("a", "b", "c"))
        assert self._matrix != CELLS_N_1

    def test__str__(self):
        """Test :meth:`neutrosophic_soft.matrices.matrix.NsMatrix.__str__` method."""

        matrix = NsMatrix([[(1, 0, 0), (0.5, 0.25, 0.1)], [(0.5, 0.5, 0.5), (0, 1, 1)]])

        assert str(matrix) == (
            "[(1, 0, 0)       (0.5, 0.25, 0.1)]\n"
            "[(0.5, 0.5, 0.5) (0, 1, 1)]"
        )


class TestFromSoftSet:
    """
    Define :func:`neutrosophic_soft.matrices.matrix.from_soft_set` and
    :func:`neutrosophic_soft.matrices.matrix.to_soft_set` definitions unit
    tests methods.
    """

    def test_from_soft_set(self):
        """Test :func:`neutrosophic_soft.matrices.matrix.from_soft_set` definition."""

        N = NsSoftSet(UNIVERSE_EXAMPLE, PARAMETERS_EXAMPLE, CELLS_N_2)
        matrix = from_soft_set(N)

        assert matrix.row_labels == N.universe
        assert matrix.col_labels == N.parameters

        for parameter, u, value in N:
            i = N.universe.index(u)
            j = N.parameters.index(parameter)

            assert matrix[i, j] == value

    def test_round_trip(self):
        """Test the soft set and matrix conversions round trip."""

        random_generator = np.random.default_rng(4)

        for _ in range(50):
            M = random_matrix(3, 2, random_generator)

            assert from_soft_set(to_soft_set(M)) == M

        N = NsSoftSet(UNIVERSE_EXAMPLE, PARAMETERS_EXAMPLE, CELLS_N_1)

        assert to_soft_set(from_soft_set(N)) == N


class TestTranspose:
    """
    Define :func:`neutrosophic_soft.matrices.matrix.transpose` definition unit
    tests methods.
    """

    def test_transpose(self):
        """Test :func:`neutrosophic_soft.matrices.matrix.transpose` definition."""

        M_t = transpose(NsMatrix(CELLS_SQUARE))

        np.testing.assert_array_equal(
            M_t.cells,
            [
                [(0.7, 0.6, 0.7), (0.4, 0.2, 0.8), (0.9, 0.1, 0.5)],
                [(0.5, 0.7, 0.8), (0.5, 0.9, 0.3), (0.5, 0.6, 0.8)],
                [(0.8, 0.6, 0.9), (0.5, 0.9, 0.9), (0.7, 0.5, 0.4)],
            ],
        )

        M = NsMatrix(CELLS_N_1, UNIVERSE_EXAMPLE, PARAMETERS_EXAMPLE)
        M_t = transpose(M)

        assert M_t.shape == (3, 4)
        assert M_t.row_labels == PARAMETERS_EXAMPLE
        assert M_t.col_labels == UNIVERSE_EXAMPLE
        assert isinstance(M_t.row_labels, Universe)
        assert transpose(M_t) == M

    def test_row_column(self):
        """Test that the transpose of a row matrix is a column matrix."""

        report = classify(transpose(NsMatrix(CELLS_SQUARE[:1])))

        assert report.is_column
        assert not report.is_row


class TestClassify:
    """
    Define :func:`neutrosophic_soft.matrices.matrix.classify` definition unit
    tests methods.
    """

    def test_classify(self):
        """Test :func:`neutrosophic_soft.matrices.matrix.classify` definition."""

        report = classify(NsMatrix(CELLS_SQUARE))

        assert report.is_square
        assert not report.is_row
        assert not report.is_column
        assert not report.is_diagonal
        assert not report.is_symmetric
        assert not report.is_zero
        assert not report.is_universal

        report = classify(NsMatrix(CELLS_SQUARE[:1]))

        assert report.is_row
        assert not report.is_square

        report = classify(
            NsMatrix(
                [
                    [(0.7, 0.6, 0.7)],
                    [(0.4, 0.2, 0.8)],
                    [(0.9, 0.1, 0.5)],
                    [(0.4, 0.7, 0.7)],
                ]
            )
        )

        assert report.is_column
        assert not report.is_row

        report = classify(NsMatrix(CELLS_DIAGONAL))

        assert report.is_diagonal
        assert report.is_square
        assert not report.is_zero

        report = classify(NsMatrix(CELLS_SYMMETRIC))

        assert report.is_symmetric
        assert not report.is_diagonal

        report = classify(zero_matrix(Universe.default(3), ParameterSet.default(3)))

        assert report.is_zero
        assert report.is_diagonal
        assert report.is_symmetric
        assert not report.is_universal

        report = classify(
            universal_matrix(Universe.default(3), ParameterSet.default(3))
        )

        assert report.is_universal
        assert report.is_symmetric
        assert not report.is_diagonal

    def test_single_cell(self):
        """Test the classification of a :math:`1 \\times 1` matrix."""

        report = classify(NsMatrix([[(0.5, 0.5, 0.5)]]))

        assert report.is_row
        assert report.is_column
        assert report.is_square
        assert report.is_diagonal
        assert report.is_symmetric

    def test_implications(self):
        """Test that the diagonal and symmetric matrices are square."""

        random_generator = np.random.default_rng(8)

        for _ in range(SAMPLES_COUNT):
            m, n = random_generator.integers(1, 4, 2)
            cells = random_generator.choice([0.0, 1.0], (m, n, 3))
            report = classify(NsMatrix(cells))

            if report.is_diagonal or report.is_symmetric:
                assert report.is_square


def _random_pairs(seed: int, count: int = SAMPLES_COUNT, m: int = 3, n: int = 3):
    """Yield random matrix triples sharing their labels."""

    random_generator = np.random.default_rng(seed)

    for _ in range(count):
        yield (
            random_matrix(m, n, random_generator),
            random_matrix(m, n, random_generator),
            random_matrix(m, n, random_generator),
        )


class TestMatUnion:
    """
    Define :func:`neutrosophic_soft.matrices.matrix.mat_union` definition unit
    tests methods.
    """

    def test_mat_union(self):
        """Test :func:`neutrosophic_soft.matrices.matrix.mat_union` definition."""

        M_1 = NsMatrix(CELLS_N_1, UNIVERSE_EXAMPLE, PARAMETERS_EXAMPLE)
        M_2 = NsMatrix(CELLS_N_2, UNIVERSE_EXAMPLE, PARAMETERS_EXAMPLE)

        np.testing.assert_array_equal(
            mat_union(M_1, M_2).cells,
            [
                [(0.7, 0.5, 0.7), (0.5, 0.7, 0.7), (0.8, 0.6, 0.6)],
                [(0.4, 0.2, 0.1), (0.5, 0.6, 0.3), (0.5, 0.6, 0.7)],
                [(0.9, 0.1, 0.4), (0.5, 0.6, 0.5), (0.7, 0.5, 0.4)],
                [(0.4, 0.7, 0.7), (0.5, 0.5, 0.5), (0.3, 0.5, 0.5)],
            ],
        )

    def test_laws(self):
        """
        Test the commutativity, associativity, idempotence and absorption of
        :func:`neutrosophic_soft.matrices.matrix.mat_union` definition.
        """

        for A, B, C in _random_pairs(15):
            assert mat_union(A, B) == mat_union(B, A)
            assert mat_union(mat_union(A, B), C) == mat_union(A, mat_union(B, C))
            assert mat_union(A, A) == A
            assert mat_union(A, mat_intersection(A, B)) == A

    def test_distributivity(self):
        """Test the distributivity of the union over the intersection."""

        for A, B, C in _random_pairs(16):
            assert mat_union(A, mat_intersection(B, C)) == mat_intersection(
                mat_union(A, B), mat_union(A, C)
            )
            assert mat_intersection(A, mat_union(B, C)) == mat_union(
                mat_intersection(A, B), mat_intersection(A, C)
            )

    def test_identities(self):
        """Test the zero and universal matrices under the union."""

        for A, _B, _C in _random_pairs(23):
            zero = zero_matrix(A.row_labels, A.col_labels)
            universal = universal_matrix(A.row_labels, A.col_labels)

            assert mat_union(A, zero) == A
            assert mat_union(A, universal) == universal

    def test_raise_exception_mat_union(self):
        """
        Test :func:`neutrosophic_soft.matrices.matrix.mat_union` definition
        raised exception.
        """

        pytest.raises(
            ShapeMismatchError,
            lambda: mat_union(NsMatrix(CELLS_N_1), NsMatrix(CELLS_SQUARE)),
        )

        pytest.raises(
            ShapeMismatchError,
            lambda: mat_union(
                NsMatrix(CELLS_SQUARE),
                NsMatrix(CELLS_SQUARE, ("a", "b", "c")),
            ),
        )


class TestMatIntersection:
    """
    Define :func:`neutrosophic_soft.matrices.matrix.mat_intersection` definition
    unit tests methods.
    """

    def test_mat_intersection(self):
        """
        Test :func:`neutrosophic_soft.matrices.matrix.mat_intersection`
        definition.
        """

        M_1 = NsMatrix(CELLS_N_1, UNIVERSE_EXAMPLE, PARAMETERS_EXAMPLE)
        M_2 = NsMatrix(CELLS_N_2, UNIVERSE_EXAMPLE, PARAMETERS_EXAMPLE)

        np.testing.assert_array_equal(
            mat_intersection(M_1, M_2).cells,
            [
                [(0.4, 0.6, 0.8), (0.5, 0.7, 0.8), (0.7, 0.8, 0.9)],
                [(0.2, 0.5, 0.8), (0.3, 0.9, 0.3), (0.5, 0.9, 0.9)],
                [(0.3, 0.1, 0.5), (0.2, 0.6, 0.8), (0.7, 0.5, 0.8)],
                [(0.4, 0.7, 0.7), (0.4, 0.8, 0.5), (0.2, 0.8, 0.6)],
            ],
        )

    def test_laws(self):
        """
        Test the commutativity, associativity, idempotence and absorption of
        :func:`neutrosophic_soft.matrices.matrix.mat_intersection` definition.
        """

        for A, B, C in _random_pairs(42):
            assert mat_intersection(A, B) == mat_intersection(B, A)
            assert mat_intersection(mat_intersection(A, B), C) == mat_intersection(
                A, mat_intersection(B, C)
            )
            assert mat_intersection(A, A) == A
            assert mat_intersection(A, mat_union(A, B)) == A

    def test_identities(self):
        """Test the zero and universal matrices under the intersection."""

        for A, _B, _C in _random_pairs(108):
            zero = zero_matrix(A.row_labels, A.col_labels)
            universal = universal_matrix(A.row_labels, A.col_labels)

            assert mat_intersection(A, zero) == zero
            assert mat_intersection(A, universal) == A


class TestMatComplement:
    """
    Define :func:`neutrosophic_soft.matrices.matrix.mat_complement` definition
    unit tests methods.
    """

    def test_mat_complement(self):
        """Test :func:`neutrosophic_soft.matrices.matrix.mat_complement` definition."""

        M_c = mat_complement(
            NsMatrix(CELLS_N_1, UNIVERSE_EXAMPLE, PARAMETERS_EXAMPLE)
        )

        np.testing.assert_allclose(
            M_c.cells,
            [
                [(0.8, 0.5, 0.4), (0.7, 0.3, 0.5), (0.6, 0.2, 0.7)],
                [(0.1, 0.5, 0.2), (0.3, 0.4, 0.3), (0.7, 0.4, 0.5)],
                [(0.4, 0.9, 0.3), (0.5, 0.4, 0.2), (0.8, 0.5, 0.7)],
                [(0.7, 0.3, 0.4), (0.5, 0.5, 0.4), (0.5, 0.2, 0.2)],
            ],
            atol=TOLERANCE_ABSOLUTE_TESTS,
        )

        zero = zero_matrix(UNIVERSE_EXAMPLE, PARAMETERS_EXAMPLE)

        assert mat_complement(zero) == universal_matrix(
            UNIVERSE_EXAMPLE, PARAMETERS_EXAMPLE
        )
        assert mat_complement(mat_complement(zero)) == zero

    def test_double_complement(self):
        """Test that the complement is an involution."""

        for A, _B, _C in _random_pairs(4):
            np.testing.assert_allclose(
                mat_complement(mat_complement(A)).cells,
                A.cells,
                atol=TOLERANCE_ABSOLUTE_TESTS,
            )

    def test_de_morgan(self):
        """Test the *De Morgan* laws on the union and intersection."""

        for A, B, _C in _random_pairs(1, 1000):
            np.testing.assert_allclose(
                mat_complement(mat_union(A, B)).cells,
                mat_intersection(mat_complement(A), mat_complement(B)).cells,
                atol=TOLERANCE_ABSOLUTE_TESTS,
            )
            np.testing.assert_allclose(
                mat_complement(mat_intersection(A, B)).cells,
                mat_union(mat_complement(A), mat_complement(B)).cells,
                atol=TOLERANCE_ABSOLUTE_TESTS,
            )


class TestMatSubset:
    """
    Define :func:`neutrosophic_soft.matrices.matrix.mat_subset`,
    :func:`neutrosophic_soft.matrices.matrix.mat_proper_subset` and
    :func:`neutrosophic_soft.matrices.matrix.mat_equal` definitions unit tests
    methods.
    """

    def test_mat_subset(self):
        """Test :func:`neutrosophic_soft.matrices.matrix.mat_subset` definition."""

        M_1 = NsMatrix(CELLS_N_1, UNIVERSE_EXAMPLE, PARAMETERS_EXAMPLE)
        M_2 = NsMatrix(CELLS_N_2, UNIVERSE_EXAMPLE, PARAMETERS_EXAMPLE)

        assert mat_subset(M_1, M_1)
        assert not mat_proper_subset(M_1, M_1)
        assert mat_equal(M_1, M_1)

        assert not mat_subset(M_1, M_2)
        assert not mat_subset(M_2, M_1)
        assert not mat_equal(M_1, M_2)

        assert mat_subset(mat_intersection(M_1, M_2), M_1)
        assert mat_subset(M_1, mat_union(M_1, M_2))
        assert mat_proper_subset(M_1, mat_union(M_1, M_2))

        zero = zero_matrix(UNIVERSE_EXAMPLE, PARAMETERS_EXAMPLE)
        universal = universal_matrix(UNIVERSE_EXAMPLE, PARAMETERS_EXAMPLE)

        assert mat_proper_subset(zero, M_1)
        assert mat_proper_subset(M_1, universal)

    def test_partial_order(self):
        """Test that the submatrix relation is a partial order."""

        for A, B, C in _random_pairs(48):
            lower = mat_intersection(A, B)
            upper = mat_union(lower, C)

            assert mat_subset(A, A)
            assert mat_subset(lower, A)
            assert mat_subset(A, mat_union(A, C))
            assert mat_subset(lower, upper)

            A_copy = NsMatrix(np.copy(A.cells), A.row_labels, A.col_labels)

            assert A_copy is not A
            assert mat_subset(A, A_copy)
            assert mat_subset(A_copy, A)
            assert mat_equal(A, A_copy)

            if not mat_equal(lower, A):
                assert not mat_subset(A, lower)

    def test_raise_exception_mat_subset(self):
        """
        Test :func:`neutrosophic_soft.matrices.matrix.mat_subset` definition
        raised exception.
        """

        pytest.raises(
            ShapeMismatchError,
            lambda: mat_subset(NsMatrix(CELLS_N_1), NsMatrix(CELLS_SQUARE)),
        )


class TestMatDisjoint:
    """
    Define :func:`neutrosophic_soft.matrices.matrix.mat_disjoint` definition
    unit tests methods.
    """

    def test_mat_disjoint(self):
        """Test :func:`neutrosophic_soft.matrices.matrix.mat_disjoint` definition."""

        M = NsMatrix(CELLS_SQUARE)
        zero = zero_matrix(M.row_labels, M.col_labels)

        assert mat_disjoint(M, zero)
        assert not mat_disjoint(M, M)

    def test_cellwise(self):
        """
        Test that the matrices are disjoint if and only if every cellwise
        intersection is the zero value.
        """

        random_generator = np.random.default_rng(2)
        outcomes = set()

        for _ in range(SAMPLES_COUNT):
            mask_A = random_generator.uniform(0, 1, (2, 2)) < 0.7
            mask_B = random_generator.uniform(0, 1, (2, 2)) < 0.7

            cells_A = np.where(
                mask_A[..., None],
                ZERO_VALUE,
                random_generator.uniform(0.1, 0.9, (2, 2, 3)),
            )
            cells_B = np.where(
                mask_B[..., None],
                ZERO_VALUE,
                random_generator.uniform(0.1, 0.9, (2, 2, 3)),
            )

            disjoint = mat_disjoint(NsMatrix(cells_A), NsMatrix(cells_B))
            outcomes.add(disjoint)

            assert disjoint == bool(np.all(mask_A | mask_B))

        assert outcomes == {True, False}


class TestZeroMatrix:
    """
    Define :func:`neutrosophic_soft.matrices.matrix.zero_matrix` and
    :func:`neutrosophic_soft.matrices.matrix.universal_matrix` definitions unit
    tests methods.
    """

    def test_zero_matrix(self):
        """Test :func:`neutrosophic_soft.matrices.matrix.zero_matrix` definition."""

        zero = zero_matrix(("u_1", "u_2"), ("x_1",))

        assert zero.shape == (2, 1)
        assert zero[1, 0] == (0, 1, 1)
        assert not zero.cells.flags.writeable

        universal = universal_matrix(("u_1", "u_2"), ("x_1",))

        assert universal[0, 0] == (1, 0, 0)


class TestRandomMatrix:
    """
    Define :func:`neutrosophic_soft.matrices.matrix.random_matrix` definition
    unit tests methods.
    """

    def test_random_matrix(self):
        """Test :func:`neutrosophic_soft.matrices.matrix.random_matrix` definition."""

        M = random_matrix(4, 2, 16)

        assert M.shape == (4, 2)
        assert M == random_matrix(4, 2, 16)
        assert np.all((M.cells >= 0) & (M.cells <= 1))

        M = random_matrix(4, 2, 16, decimals=1)

        np.testing.assert_array_equal(M.cells, np.round(M.cells, 1))
