"""
Configuration
=============

Define the run configuration of *Neutrosophic - Soft*:

-   :attr:`neutrosophic_soft.io.DEFAULT_CONFIGURATION`
-   :class:`neutrosophic_soft.io.Configuration`
-   :func:`neutrosophic_soft.io.use_defaults`
-   :class:`neutrosophic_soft.io.defaults`

The *NSM_PRECISION* environment variable overrides the output precision of
the configurations built from the defaults.
"""

from __future__ import annotations

import functools
import os

from colour.hints import Any, Callable, Dict
from colour.utilities import Structure, usage_warning
from colour.utilities.documentation import (
    DocstringDict,
    is_documentation_building,
)

from neutrosophic_soft.constants import PRECISION_MAXIMUM
from neutrosophic_soft.utilities import ValidationError

__author__ = "Neutrosophic Soft Developers"
__copyright__ = "Copyright 2026 Neutrosophic Soft Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Neutrosophic Soft Developers"
__status__ = "Production"

__all__ = [
    "ENVIRONMENT_VARIABLE_PRECISION",
    "DEFAULT_CONFIGURATION",
    "Configuration",
    "use_defaults",
    "defaults",
]

ENVIRONMENT_VARIABLE_PRECISION: str = "NSM_PRECISION"
"""Environment variable overriding the output precision."""

DEFAULT_CONFIGURATION: Dict = {
    "product_kind": "and",
    "norm": "minmax",
    "complement_mode": "one_minus_i",
    "output_precision": 4,
}
if is_documentation_building():  # pragma: no cover
    DEFAULT_CONFIGURATION = DocstringDict(DEFAULT_CONFIGURATION)
    DEFAULT_CONFIGURATION.__doc__ = """
*Neutrosophic - Soft* default configuration.
"""


def _is_precision(value: Any) -> bool:
    """Return whether given value is a supported output precision."""

    return (
        isinstance(value, int)
        and not isinstance(value, bool)
        and 0 <= value <= PRECISION_MAXIMUM
    )


def _environment_precision(default: int) -> int:
    """
    Return the output precision set with the *NSM_PRECISION* environment
    variable or given default when it is unset or invalid.
    """

    value = os.environ.get(ENVIRONMENT_VARIABLE_PRECISION)

    if value is None:
        return default

    try:
        precision = int(value)
    except ValueError:
        precision = -1

    if not _is_precision(precision):
        usage_warning(
            f'"{ENVIRONMENT_VARIABLE_PRECISION}" environment variable value '
            f'"{value}" is not an integer in range [0, {PRECISION_MAXIMUM}], '
            f'the "{default}" precision is used instead!'
        )

        return default

    return precision


class Configuration(Structure):
    """
    *Neutrosophic - Soft* configuration factory based on
    :class:`colour.utilities.Structure` class and allowing to access key values
    using dot syntax.

    Parameters
    ----------
    configuration
        Configuration to use instead of the default one, the *NSM_PRECISION*
        environment variable only overrides the default one.

    Raises
    ------
    ValidationError
        If the output precision is not an integer in range [0, 17].

    Examples
    --------
    >>> Configuration({"output_precision": 2}).output_precision
    2
    """

    def __init__(self, configuration: Dict | None = None) -> None:
        if configuration is None:
            configuration = dict(DEFAULT_CONFIGURATION)
            configuration["output_precision"] = _environment_precision(
                configuration["output_precision"]
            )
        else:
            configuration = {**DEFAULT_CONFIGURATION, **configuration}

        if not _is_precision(configuration["output_precision"]):
            raise ValidationError(
                f'"{configuration["output_precision"]}" output precision is not '
                f"an integer in range [0, {PRECISION_MAXIMUM}]!"
            )

        super().__init__(configuration)


def use_defaults(**kwargs: Any):
    """
    Modify the *Neutrosophic - Soft* default configuration.

    Other Parameters
    ----------------
    kwargs
        {"product_kind", "norm", "complement_mode", "output_precision"},
        Default configuration values to set.

    Raises
    ------
    KeyError
        If a key is not a configuration key.
    """

    global DEFAULT_CONFIGURATION  # noqa: PLW0602

    for key, value in kwargs.items():
        if key not in DEFAULT_CONFIGURATION:
            raise KeyError(
                f'"{key}" is not a configuration key, it must be one of '
                f"{sorted(DEFAULT_CONFIGURATION)}!"
            )

        DEFAULT_CONFIGURATION[key] = value


class defaults:
    """
    A context manager and decorator temporarily modifying the *Neutrosophic -
    Soft* default configuration.

    Other Parameters
    ----------------
    kwargs
        {"product_kind", "norm", "complement_mode", "output_precision"},
        Default configuration values to set.

    Examples
    --------
    >>> with defaults(norm="einstein"):
    ...     Configuration().norm
    'einstein'
    >>> Configuration().norm
    'minmax'
    """

    def __init__(self, **kwargs: Any) -> None:
        self._kwargs = kwargs
        self._previous: Dict = {}

    def __enter__(self) -> defaults:
        """
        Modify the default configuration upon entering the context manager.
        """

        self._previous = dict(DEFAULT_CONFIGURATION)

        use_defaults(**self._kwargs)

        return self

    def __exit__(self, *args: Any):
        """Restore the default configuration upon exiting the context manager."""

        use_defaults(**self._previous)

    def __call__(self, function: Callable) -> Callable:
        """Call the wrapped definition."""

        @functools.wraps(function)
        def wrapper(*args: Any, **kwargs: Any) -> Callable:
            with self:
                return function(*args, **kwargs)

        return wrapper
