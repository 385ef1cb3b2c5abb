"""
Neutrosophic - Soft
===================

Neutrosophic soft sets and neutrosophic soft matrices algebra, And-product and
Or-product of matrices and the min-max-max decision making method on top of
them.

Subpackages
-----------
-   algebra: Neutrosophic values, t-norms and t-conorms.
-   sets: Neutrosophic soft sets and their operations.
-   matrices: Neutrosophic soft matrices, their operations and products.
-   decision: Min-max-max decision making.
-   io: Configuration, matrix documents and command line interface.
-   fixtures: Bundled fixtures matrix documents.
-   utilities: Exceptions and various utilities.
"""

from .algebra import (
    NORM_PAIRS,
    UNIVERSAL_VALUE,
    ZERO_VALUE,
    NsValue,
)
from .sets import (
    NsSoftSet,
    ParameterSet,
    Universe,
    set_complement,
    set_equal,
    set_intersection,
    set_subset,
    set_union,
)
from .matrices import (
    NsMatrix,
    and_product,
    classify,
    from_soft_set,
    mat_complement,
    mat_disjoint,
    mat_intersection,
    mat_subset,
    mat_union,
    matrix_product,
    or_product,
    to_soft_set,
    transpose,
)
from .decision import dmmm, nsm_decide, optimum, score
from .io import Configuration, defaults, read_matrix, serialize_matrix
from .fixtures import load

__author__ = "Neutrosophic Soft Developers"
__copyright__ = "Copyright 2026 Neutrosophic Soft Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Neutrosophic Soft Developers"
__status__ = "Production"

__all__ = [
    "NORM_PAIRS",
    "UNIVERSAL_VALUE",
    "ZERO_VALUE",
    "NsValue",
]
__all__ += [
    "NsSoftSet",
    "ParameterSet",
    "Universe",
    "set_complement",
    "set_equal",
    "set_intersection",
    "set_subset",
    "set_union",
]
__all__ += [
    "NsMatrix",
    "and_product",
    "classify",
    "from_soft_set",
    "mat_complement",
    "mat_disjoint",
    "mat_intersection",
    "mat_subset",
    "mat_union",
    "matrix_product",
    "or_product",
    "to_soft_set",
    "transpose",
]
__all__ += [
    "dmmm",
    "nsm_decide",
    "optimum",
    "score",
]
__all__ += [
    "Configuration",
    "defaults",
    "read_matrix",
    "serialize_matrix",
]
__all__ += [
    "load",
]

__application_name__ = "Neutrosophic - Soft"

__major_version__ = "0"
__minor_version__ = "1"
__change_version__ = "0"
__version__ = ".".join((__major_version__, __minor_version__, __change_version__))
