from .matrix import (
    NsMatrix,
    ShapeReport,
    from_soft_set,
    to_soft_set,
    transpose,
    classify,
    mat_union,
    mat_intersection,
    mat_complement,
    mat_subset,
    mat_proper_subset,
    mat_equal,
    mat_disjoint,
    zero_matrix,
    universal_matrix,
    random_matrix,
)
from .products import (
    LiteralProductKind,
    BlockIndex,
    block_index,
    block_column,
    block_indexes,
    and_product,
    or_product,
    PRODUCT_METHODS,
    matrix_product,
)

__all__ = [
    "NsMatrix",
    "ShapeReport",
    "from_soft_set",
    "to_soft_set",
    "transpose",
    "classify",
    "mat_union",
    "mat_intersection",
    "mat_complement",
    "mat_subset",
    "mat_proper_subset",
    "mat_equal",
    "mat_disjoint",
    "zero_matrix",
    "universal_matrix",
    "random_matrix",
]
__all__ += [
    "LiteralProductKind",
    "BlockIndex",
    "block_index",
    "block_column",
    "block_indexes",
    "and_product",
    "or_product",
    "PRODUCT_METHODS",
    "matrix_product",
]
