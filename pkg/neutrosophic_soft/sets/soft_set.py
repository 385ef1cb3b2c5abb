"""
Neutrosophic Soft Sets
======================

Define the neutrosophic soft sets and their algebra:

-   :class:`neutrosophic_soft.sets.Universe`
-   :class:`neutrosophic_soft.sets.ParameterSet`
-   :class:`neutrosophic_soft.sets.NsSoftSet`
-   :func:`neutrosophic_soft.sets.set_complement`
-   :func:`neutrosophic_soft.sets.set_union`
-   :func:`neutrosophic_soft.sets.set_intersection`
-   :func:`neutrosophic_soft.sets.set_subset`
-   :func:`neutrosophic_soft.sets.set_equal`

A neutrosophic soft set :math:`N` over a universe :math:`U` and a parameter
set :math:`E` is a total map :math:`f_N: E \\to N(U)`, i.e., every
*(parameter, object)* pair is valued with a neutrosophic value
:math:`(T, I, F)`.
"""

from __future__ import annotations

from collections import Counter

import numpy as np
from colour.hints import (
    Any,
    ArrayLike,
    Dict,
    Iterator,
    Mapping,
    NDArrayFloat,
    Sequence,
    Tuple,
)
from colour.utilities import tsplit, tstack

from neutrosophic_soft.algebra import (
    LiteralComplementMode,
    LiteralNorm,
    NormPair,
    NsValue,
    as_membership_grid,
    as_norm_pair,
    validate_complement_mode,
)
from neutrosophic_soft.utilities import (
    DimensionMismatchError,
    DuplicateLabelError,
    ValidationError,
    check_labels_match,
    default_labels,
)

__author__ = "Neutrosophic Soft Developers"
__copyright__ = "Copyright 2026 Neutrosophic Soft Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Neutrosophic Soft Developers"
__status__ = "Production"

__all__ = [
    "Labels",
    "Universe",
    "ParameterSet",
    "NsSoftSet",
    "set_complement",
    "set_union",
    "set_intersection",
    "set_subset",
    "set_equal",
]


class Labels(tuple):
    """
    Define an ordered, non-empty sequence of distinct text labels.

    Parameters
    ----------
    labels
        Labels.

    Raises
    ------
    DimensionMismatchError
        If there are no labels.
    ValidationError
        If a label is not a :class:`str` instance.
    DuplicateLabelError
        If a label is repeated.
    """

    KIND: str = "labels"
    """Labels kind used in the error messages."""

    PREFIX: str = "l"
    """Prefix of the default labels."""

    def __new__(cls, labels: Sequence[str]) -> Labels:
        """Validate and build the labels."""

        labels = tuple(labels)

        if not labels:
            raise DimensionMismatchError(f"The {cls.KIND} must not be empty!")

        for label in labels:
            if not isinstance(label, str):
                raise ValidationError(
                    f"The {cls.KIND} must only contain text labels, "
                    f"got {label!r}!"
                )

        duplicates = [label for label, count in Counter(labels).items() if count > 1]
        if duplicates:
            raise DuplicateLabelError(
                f"The {cls.KIND} repeat the following label(s): {duplicates}!"
            )

        return super().__new__(cls, labels)

    @classmethod
    def default(cls, count: int) -> Labels:
        """
        Return the default labels for given count.

        Examples
        --------
        >>> Universe.default(2)
        Universe('u_1', 'u_2')
        """

        return cls(default_labels(cls.PREFIX, count))

    def __repr__(self) -> str:
        """Return a representation of the labels."""

        return f"{self.__class__.__name__}({', '.join(map(repr, self))})"


class Universe(Labels):
    """
    Define a universe :math:`U`, i.e., the ordered objects :math:`u_1`, ...,
    :math:`u_m`.

    Examples
    --------
    >>> Universe(("u_1", "u_2"))
    Universe('u_1', 'u_2')
    """

    KIND: str = "universe"
    PREFIX: str = "u"


class ParameterSet(Labels):
    """
    Define a parameter set :math:`E`, i.e., the ordered parameters
    :math:`x_1`, ..., :math:`x_n`.
    """

    KIND: str = "parameter set"
    PREFIX: str = "x"


class NsSoftSet:
    """
    Define a neutrosophic soft set.

    Parameters
    ----------
    universe
        Universe :math:`U`, i.e., objects labels.
    parameters
        Parameter set :math:`E`, i.e., parameters labels.
    cells
        Neutrosophic values laid out with the objects as rows and the
        parameters as columns, i.e., of shape (m, n, 3), the layout of the
        neutrosophic soft matrices and of the documents.

    Attributes
    ----------
    -   :attr:`neutrosophic_soft.sets.NsSoftSet.universe`
    -   :attr:`neutrosophic_soft.sets.NsSoftSet.parameters`
    -   :attr:`neutrosophic_soft.sets.NsSoftSet.grid`

    Methods
    -------
    -   :meth:`neutrosophic_soft.sets.NsSoftSet.__init__`
    -   :meth:`neutrosophic_soft.sets.NsSoftSet.from_mapping`
    -   :meth:`neutrosophic_soft.sets.NsSoftSet.to_mapping`
    -   :meth:`neutrosophic_soft.sets.NsSoftSet.valuation`
    -   :meth:`neutrosophic_soft.sets.NsSoftSet.__iter__`
    -   :meth:`neutrosophic_soft.sets.NsSoftSet.__eq__`

    Examples
    --------
    >>> N = NsSoftSet(["u_1", "u_2"], ["x_1"], [[(0.2, 0.5, 0.1)], [(0.3, 0.1, 0.4)]])
    >>> N.valuation("x_1", "u_2")
    NsValue(T=0.3, I=0.1, F=0.4)
    """

    def __init__(
        self,
        universe: Sequence[str],
        parameters: Sequence[str],
        cells: ArrayLike,
    ) -> None:
        self._universe: Universe = (
            universe if isinstance(universe, Universe) else Universe(universe)
        )
        self._parameters: ParameterSet = (
            parameters
            if isinstance(parameters, ParameterSet)
            else ParameterSet(parameters)
        )
        self._grid: NDArrayFloat = as_membership_grid(
            cells, self._universe, self._parameters
        )

    @classmethod
    def _from_grid(
        cls, universe: Universe, parameters: ParameterSet, grid: NDArrayFloat
    ) -> NsSoftSet:
        """
        Build a neutrosophic soft set from an already validated grid, typically
        the result of an operation, clipping the rounding errors of the norms.
        """

        soft_set = cls.__new__(cls)
        soft_set._universe = universe
        soft_set._parameters = parameters
        soft_set._grid = np.clip(grid, 0, 1)
        soft_set._grid.setflags(write=False)

        return soft_set

    @classmethod
    def from_mapping(
        cls,
        mapping: Mapping[str, Mapping[str, Sequence[float]]],
    ) -> NsSoftSet:
        """
        Build a neutrosophic soft set from its set notation, i.e., a mapping
        of parameters to mappings of objects to neutrosophic values.

        Parameters
        ----------
        mapping
            Mapping :math:`x \\mapsto \\{u \\mapsto (T, I, F)\\}`, the universe
            order is the objects order of the first parameter.

        Returns
        -------
        :class:`neutrosophic_soft.sets.NsSoftSet`
            Neutrosophic soft set.

        Raises
        ------
        DimensionMismatchError
            If the valuation is not total, i.e., the parameters do not all
            value the same objects.

        Examples
        --------
        >>> N = NsSoftSet.from_mapping(
        ...     {"x_1": {"u_1": (0.7, 0.6, 0.7)}, "x_2": {"u_1": (0.5, 0.7, 0.8)}}
        ... )
        >>> N.parameters
        ParameterSet('x_1', 'x_2')
        """

        parameters = ParameterSet(list(mapping.keys()))
        universe = Universe(list(mapping[parameters[0]].keys()))

        for parameter in parameters:
            if set(mapping[parameter].keys()) != set(universe):
                raise DimensionMismatchError(
                    f'"{parameter}" parameter does not value exactly the '
                    f"{list(universe)} objects!"
                )

        cells = [
            [mapping[parameter][u] for parameter in parameters] for u in universe
        ]

        return cls(universe, parameters, cells)

    @property
    def universe(self) -> Universe:
        """
        Getter property for the universe.

        Returns
        -------
        :class:`neutrosophic_soft.sets.Universe`
            Universe.
        """

        return self._universe

    @property
    def parameters(self) -> ParameterSet:
        """
        Getter property for the parameter set.

        Returns
        -------
        :class:`neutrosophic_soft.sets.ParameterSet`
            Parameter set.
        """

        return self._parameters

    @property
    def grid(self) -> NDArrayFloat:
        """
        Getter property for the read-only grid of neutrosophic values of shape
        (m, n, 3).

        Returns
        -------
        :class:`numpy.ndarray`
            Grid of neutrosophic values.
        """

        return self._grid

    def valuation(self, parameter: str, u: str) -> NsValue:
        """
        Return the neutrosophic value of given object under given parameter,
        i.e., :math:`(T_{f_N(x)}(u), I_{f_N(x)}(u), F_{f_N(x)}(u))`.

        Parameters
        ----------
        parameter
            Parameter label.
        u
            Object label.

        Returns
        -------
        :class:`neutrosophic_soft.algebra.NsValue`
            Neutrosophic value.

        Raises
        ------
        KeyError
            If the parameter or the object is unknown.
        """

        if parameter not in self._parameters:
            raise KeyError(f'"{parameter}" parameter is not defined!')

        if u not in self._universe:
            raise KeyError(f'"{u}" object is not defined!')

        return NsValue(
            *self._grid[self._universe.index(u), self._parameters.index(parameter)]
        )

    def to_mapping(self) -> Dict[str, Dict[str, NsValue]]:
        """
        Return the set notation of the neutrosophic soft set.

        Returns
        -------
        :class:`dict`
            Mapping :math:`x \\mapsto \\{u \\mapsto (T, I, F)\\}`.
        """

        mapping: Dict[str, Dict[str, NsValue]] = {}
        for parameter, u, value in self:
            mapping.setdefault(parameter, {})[u] = value

        return mapping

    def __iter__(self) -> Iterator[Tuple[str, str, NsValue]]:
        """
        Iterate over the *(parameter, object, value)* triples, parameters in
        parameter set order then objects in universe order.
        """

        for j, parameter in enumerate(self._parameters):
            for i, u in enumerate(self._universe):
                yield parameter, u, NsValue(*self._grid[i, j])

    def __eq__(self, other: Any) -> bool:
        """Return whether the sets have the same labels and the same cells."""

        if not isinstance(other, NsSoftSet):
            return NotImplemented

        return (
            self._universe == other.universe
            and self._parameters == other.parameters
            and np.array_equal(self._grid, other.grid)
        )

    def __hash__(self) -> int:
        """Return the hash of the labels and cells."""

        return hash((self._universe, self._parameters, self._grid.tobytes()))

    def __repr__(self) -> str:
        """Return a representation of the neutrosophic soft set."""

        return (
            f"NsSoftSet(universe={list(self._universe)}, "
            f"parameters={list(self._parameters)})"
        )


def _check_compatible(N_1: NsSoftSet, N_2: NsSoftSet) -> None:
    """Check that given neutrosophic soft sets share their labels."""

    check_labels_match(N_1.universe, N_2.universe, "universes")
    check_labels_match(N_1.parameters, N_2.parameters, "parameter sets")


def set_complement(
    N: NsSoftSet, mode: LiteralComplementMode | str = "one_minus_i"
) -> NsSoftSet:
    """
    Return the complement of given neutrosophic soft set.

    Parameters
    ----------
    N
        Neutrosophic soft set.
    mode
        Complement convention, *identity_i* maps :math:`(T, I, F)` to
        :math:`(F, I, T)` and *one_minus_i* maps it to :math:`(F, 1 - I, T)`.

    Returns
    -------
    :class:`neutrosophic_soft.sets.NsSoftSet`
        Complement.

    Examples
    --------
    >>> N = NsSoftSet(["u_3"], ["x_1"], [[(0.3, 0.1, 0.4)]])
    >>> set_complement(N, "identity_i").valuation("x_1", "u_3")
    NsValue(T=0.4, I=0.1, F=0.3)
    >>> set_complement(N).valuation("x_1", "u_3")
    NsValue(T=0.4, I=0.9, F=0.3)
    """

    mode = validate_complement_mode(mode)

    T, I, F = tsplit(N.grid)  # noqa: E741

    if mode == "one_minus_i":
        I = 1 - I  # noqa: E741

    return NsSoftSet._from_grid(N.universe, N.parameters, tstack([F, I, T]))


def set_union(
    N_1: NsSoftSet,
    N_2: NsSoftSet,
    pair: NormPair | LiteralNorm | str = "minmax",
) -> NsSoftSet:
    """
    Return the union of given neutrosophic soft sets, i.e., cellwise
    :math:`(s(T_1, T_2), t(I_1, I_2), t(F_1, F_2))`.

    Parameters
    ----------
    N_1
        First neutrosophic soft set.
    N_2
        Second neutrosophic soft set.
    pair
        Dual pair of t-norm :math:`t` and t-conorm :math:`s` or its name.

    Returns
    -------
    :class:`neutrosophic_soft.sets.NsSoftSet`
        Union.

    Raises
    ------
    ShapeMismatchError
        If the sets do not share their universe and parameter set.

    Examples
    --------
    >>> N_1 = NsSoftSet(["u_2"], ["x_1"], [[(0.2, 0.5, 0.1)]])
    >>> N_2 = NsSoftSet(["u_2"], ["x_1"], [[(0.4, 0.2, 0.8)]])
    >>> set_union(N_1, N_2).valuation("x_1", "u_2")
    NsValue(T=0.4, I=0.2, F=0.1)
    """

    _check_compatible(N_1, N_2)

    pair = as_norm_pair(pair)

    T_1, I_1, F_1 = tsplit(N_1.grid)
    T_2, I_2, F_2 = tsplit(N_2.grid)

    return NsSoftSet._from_grid(
        N_1.universe,
        N_1.parameters,
        tstack([pair.tconorm(T_1, T_2), pair.tnorm(I_1, I_2), pair.tnorm(F_1, F_2)]),
    )


def set_intersection(
    N_1: NsSoftSet,
    N_2: NsSoftSet,
    pair: NormPair | LiteralNorm | str = "minmax",
) -> NsSoftSet:
    """
    Return the intersection of given neutrosophic soft sets, i.e., cellwise
    :math:`(t(T_1, T_2), s(I_1, I_2), s(F_1, F_2))`.

    Parameters
    ----------
    N_1
        First neutrosophic soft set.
    N_2
        Second neutrosophic soft set.
    pair
        Dual pair of t-norm :math:`t` and t-conorm :math:`s` or its name.

    Returns
    -------
    :class:`neutrosophic_soft.sets.NsSoftSet`
        Intersection.

    Raises
    ------
    ShapeMismatchError
        If the sets do not share their universe and parameter set.

    Examples
    --------
    >>> N_1 = NsSoftSet(["u_2"], ["x_1"], [[(0.2, 0.5, 0.1)]])
    >>> N_2 = NsSoftSet(["u_2"], ["x_1"], [[(0.4, 0.2, 0.8)]])
    >>> set_intersection(N_1, N_2).valuation("x_1", "u_2")
    NsValue(T=0.2, I=0.5, F=0.8)
    """

    _check_compatible(N_1, N_2)

    pair = as_norm_pair(pair)

    T_1, I_1, F_1 = tsplit(N_1.grid)
    T_2, I_2, F_2 = tsplit(N_2.grid)

    return NsSoftSet._from_grid(
        N_1.universe,
        N_1.parameters,
        tstack([pair.tnorm(T_1, T_2), pair.tconorm(I_1, I_2), pair.tconorm(F_1, F_2)]),
    )


def set_subset(N_1: NsSoftSet, N_2: NsSoftSet) -> bool:
    """
    Return whether the first neutrosophic soft set is a subset of the second
    one, i.e., cellwise :math:`T_1 \\leq T_2`, :math:`I_1 \\geq I_2` and
    :math:`F_1 \\geq F_2`.

    Parameters
    ----------
    N_1
        First neutrosophic soft set.
    N_2
        Second neutrosophic soft set.

    Returns
    -------
    :class:`bool`
        Whether the first set is a subset of the second one.

    Raises
    ------
    ShapeMismatchError
        If the sets do not share their universe and parameter set.
    """

    _check_compatible(N_1, N_2)

    T_1, I_1, F_1 = tsplit(N_1.grid)
    T_2, I_2, F_2 = tsplit(N_2.grid)

    return bool(np.all(T_1 <= T_2) and np.all(I_1 >= I_2) and np.all(F_1 >= F_2))


def set_equal(N_1: NsSoftSet, N_2: NsSoftSet) -> bool:
    """
    Return whether given neutrosophic soft sets are equal, i.e., each one is a
    subset of the other.

    Raises
    ------
    ShapeMismatchError
        If the sets do not share their universe and parameter set.
    """

    _check_compatible(N_1, N_2)

    return bool(np.array_equal(N_1.grid, N_2.grid))
