"""
Triangular Norms
================

Define the dual pairs of non-parametrised triangular norms (t-norms) and
triangular conorms (t-conorms) used to combine neutrosophic values:

-   :func:`neutrosophic_soft.algebra.tnorm_drastic`
-   :func:`neutrosophic_soft.algebra.tconorm_drastic`
-   :func:`neutrosophic_soft.algebra.tnorm_bounded`
-   :func:`neutrosophic_soft.algebra.tconorm_bounded`
-   :func:`neutrosophic_soft.algebra.tnorm_einstein`
-   :func:`neutrosophic_soft.algebra.tconorm_einstein`
-   :func:`neutrosophic_soft.algebra.tnorm_algebraic`
-   :func:`neutrosophic_soft.algebra.tconorm_algebraic`
-   :func:`neutrosophic_soft.algebra.tnorm_hamacher`
-   :func:`neutrosophic_soft.algebra.tconorm_hamacher`
-   :func:`neutrosophic_soft.algebra.tnorm_minmax`
-   :func:`neutrosophic_soft.algebra.tconorm_minmax`
-   :class:`neutrosophic_soft.algebra.NormPair`
-   :attr:`neutrosophic_soft.algebra.NORM_PAIRS`
-   :func:`neutrosophic_soft.algebra.resolve_norm`
-   :func:`neutrosophic_soft.algebra.as_norm_pair`
-   :func:`neutrosophic_soft.algebra.tnorm_apply`
-   :func:`neutrosophic_soft.algebra.tconorm_apply`

Each t-conorm :math:`s` is the dual of its t-norm :math:`t`, i.e.,
:math:`s(a, b) = 1 - t(1 - a, 1 - b)`. The definitions are vectorised and
accept any array-like of values in domain [0, 1].
"""

from __future__ import annotations

from collections import namedtuple

import numpy as np
from colour.hints import ArrayLike, Literal, NDArrayFloat
from colour.utilities import CanonicalMapping, as_float, as_float_array

from neutrosophic_soft.algebra.values import unit_value
from neutrosophic_soft.utilities import UnknownNormError

__author__ = "Neutrosophic Soft Developers"
__copyright__ = "Copyright 2026 Neutrosophic Soft Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Neutrosophic Soft Developers"
__status__ = "Production"

__all__ = [
    "tnorm_drastic",
    "tconorm_drastic",
    "tnorm_bounded",
    "tconorm_bounded",
    "tnorm_einstein",
    "tconorm_einstein",
    "tnorm_algebraic",
    "tconorm_algebraic",
    "tnorm_hamacher",
    "tconorm_hamacher",
    "tnorm_minmax",
    "tconorm_minmax",
    "LiteralNorm",
    "NormPair",
    "NORM_PAIRS",
    "resolve_norm",
    "as_norm_pair",
    "tnorm_apply",
    "tconorm_apply",
]


def tnorm_drastic(a: ArrayLike, b: ArrayLike) -> NDArrayFloat:
    """Return the *drastic product* of given values."""

    a = as_float_array(a)
    b = as_float_array(b)

    return as_float(np.where(np.maximum(a, b) == 1, np.minimum(a, b), 0))


def tconorm_drastic(a: ArrayLike, b: ArrayLike) -> NDArrayFloat:
    """Return the *drastic sum* of given values."""

    a = as_float_array(a)
    b = as_float_array(b)

    return as_float(np.where(np.minimum(a, b) == 0, np.maximum(a, b), 1))


def tnorm_bounded(a: ArrayLike, b: ArrayLike) -> NDArrayFloat:
    """
    Return the *bounded difference*, i.e., *Lukasiewicz* t-norm of given
    values.
    """

    a = as_float_array(a)
    b = as_float_array(b)

    return as_float(np.maximum(0, a + b - 1))


def tconorm_bounded(a: ArrayLike, b: ArrayLike) -> NDArrayFloat:
    """Return the *bounded sum* of given values."""

    a = as_float_array(a)
    b = as_float_array(b)

    return as_float(np.minimum(1, a + b))


def tnorm_einstein(a: ArrayLike, b: ArrayLike) -> NDArrayFloat:
    """
    Return the *Einstein product* of given values.

    The denominator :math:`2 - (a + b - ab)` is at least 1 in domain [0, 1].
    """

    a = as_float_array(a)
    b = as_float_array(b)

    return as_float(a * b / (2 - (a + b - a * b)))


def tconorm_einstein(a: ArrayLike, b: ArrayLike) -> NDArrayFloat:
    """Return the *Einstein sum* of given values."""

    a = as_float_array(a)
    b = as_float_array(b)

    return as_float((a + b) / (1 + a * b))


def tnorm_algebraic(a: ArrayLike, b: ArrayLike) -> NDArrayFloat:
    """Return the *algebraic product* of given values."""

    a = as_float_array(a)
    b = as_float_array(b)

    return as_float(a * b)


def tconorm_algebraic(a: ArrayLike, b: ArrayLike) -> NDArrayFloat:
    """Return the *algebraic sum*, i.e., *probabilistic sum* of given values."""

    a = as_float_array(a)
    b = as_float_array(b)

    return as_float(a + b - a * b)


def tnorm_hamacher(a: ArrayLike, b: ArrayLike) -> NDArrayFloat:
    """
    Return the *Hamacher product* of given values.

    Parameters
    ----------
    a
        First value(s) in domain [0, 1].
    b
        Second value(s) in domain [0, 1].

    Returns
    -------
    :class:`numpy.ndarray`
        *Hamacher product*.

    Notes
    -----
    -   The product is undefined at :math:`a = b = 0` where it is set to its
        limit, i.e., 0.

    Examples
    --------
    >>> float(tnorm_hamacher(0.5, 0.5))
    0.3333333333333333
    >>> float(tnorm_hamacher(0, 0))
    0.0
    """

    a = as_float_array(a)
    b = as_float_array(b)

    denominator = a + b - a * b
    undefined = denominator == 0

    return as_float(
        np.where(undefined, 0, a * b / np.where(undefined, 1, denominator))
    )


def tconorm_hamacher(a: ArrayLike, b: ArrayLike) -> NDArrayFloat:
    """
    Return the *Hamacher sum* of given values.

    Parameters
    ----------
    a
        First value(s) in domain [0, 1].
    b
        Second value(s) in domain [0, 1].

    Returns
    -------
    :class:`numpy.ndarray`
        *Hamacher sum*.

    Notes
    -----
    -   The sum is undefined at :math:`a = b = 1` where it is set to its
        limit, i.e., 1.

    Examples
    --------
    >>> float(tconorm_hamacher(0.5, 0.5))
    0.6666666666666666
    >>> float(tconorm_hamacher(1, 1))
    1.0
    """

    a = as_float_array(a)
    b = as_float_array(b)

    denominator = 1 - a * b
    undefined = denominator == 0

    return as_float(
        np.where(
            undefined,
            1,
            (a + b - 2 * a * b) / np.where(undefined, 1, denominator),
        )
    )


def tnorm_minmax(a: ArrayLike, b: ArrayLike) -> NDArrayFloat:
    """Return the *minimum* of given values."""

    return as_float(np.minimum(as_float_array(a), as_float_array(b)))


def tconorm_minmax(a: ArrayLike, b: ArrayLike) -> NDArrayFloat:
    """Return the *maximum* of given values."""

    return as_float(np.maximum(as_float_array(a), as_float_array(b)))


LiteralNorm = Literal[
    "drastic", "bounded", "einstein", "algebraic", "hamacher", "minmax"
]
"""Names of the supported dual pairs."""


class NormPair(namedtuple("NormPair", ("name", "tnorm", "tconorm"))):
    """
    Define a t-norm together with its dual t-conorm.

    Parameters
    ----------
    name
        Dual pair name.
    tnorm
        Vectorised t-norm callable.
    tconorm
        Vectorised t-conorm callable.
    """

    __slots__ = ()

    def __repr__(self) -> str:
        """Return an evaluable-looking representation naming the pair."""

        return f'NormPair("{self.name}")'


NORM_PAIRS: CanonicalMapping = CanonicalMapping(
    {
        "drastic": NormPair("drastic", tnorm_drastic, tconorm_drastic),
        "bounded": NormPair("bounded", tnorm_bounded, tconorm_bounded),
        "einstein": NormPair("einstein", tnorm_einstein, tconorm_einstein),
        "algebraic": NormPair("algebraic", tnorm_algebraic, tconorm_algebraic),
        "hamacher": NormPair("hamacher", tnorm_hamacher, tconorm_hamacher),
        "minmax": NormPair("minmax", tnorm_minmax, tconorm_minmax),
    }
)
NORM_PAIRS.__doc__ = """
Supported dual pairs of t-norms and t-conorms, keys are case-insensitive.
"""


def resolve_norm(name: LiteralNorm | str) -> NormPair:
    """
    Return the dual pair with given name.

    Parameters
    ----------
    name
        Dual pair name, the lookup is case-insensitive.

    Returns
    -------
    :class:`neutrosophic_soft.algebra.NormPair`
        Dual pair.

    Raises
    ------
    UnknownNormError
        If the name is not one of the supported dual pairs.

    Examples
    --------
    >>> resolve_norm("Einstein")
    NormPair("einstein")
    """

    try:
        return NORM_PAIRS[str(name)]
    except KeyError as error:
        raise UnknownNormError(
            f'"{name}" norm is invalid, it must be one of '
            f"{sorted(NORM_PAIRS.keys())}!"
        ) from error


def as_norm_pair(pair: NormPair | LiteralNorm | str) -> NormPair:
    """
    Return given dual pair, resolving it when given by name.

    Examples
    --------
    >>> as_norm_pair("minmax") is as_norm_pair(NORM_PAIRS["minmax"])
    True
    """

    if isinstance(pair, NormPair):
        return pair

    return resolve_norm(pair)


def tnorm_apply(pair: NormPair | LiteralNorm | str, a: float, b: float) -> float:
    """
    Apply the t-norm of given dual pair to given values.

    Parameters
    ----------
    pair
        Dual pair or its name.
    a
        First value in domain [0, 1].
    b
        Second value in domain [0, 1].

    Returns
    -------
    :class:`float`
        T-norm value, lower than or equal to :math:`min(a, b)`.

    Raises
    ------
    OutOfRangeError
        If a value is not in domain [0, 1].

    Examples
    --------
    >>> tnorm_apply("minmax", 0.3, 0.7)
    0.3
    >>> tnorm_apply("bounded", 0.3, 0.4)
    0.0
    """

    return float(as_norm_pair(pair).tnorm(unit_value(a, "a"), unit_value(b, "b")))


def tconorm_apply(pair: NormPair | LiteralNorm | str, a: float, b: float) -> float:
    """
    Apply the t-conorm of given dual pair to given values.

    Parameters
    ----------
    pair
        Dual pair or its name.
    a
        First value in domain [0, 1].
    b
        Second value in domain [0, 1].

    Returns
    -------
    :class:`float`
        T-conorm value, greater than or equal to :math:`max(a, b)`.

    Raises
    ------
    OutOfRangeError
        If a value is not in domain [0, 1].

    Examples
    --------
    >>> tconorm_apply("algebraic", 0.5, 0.5)
    0.75
    """

    return float(
        as_norm_pair(pair).tconorm(unit_value(a, "a"), unit_value(b, "b"))
    )
