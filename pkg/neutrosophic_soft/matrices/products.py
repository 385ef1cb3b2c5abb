"""
Neutrosophic Soft Matrix Products
=================================

Define the *And*-product and *Or*-product of neutrosophic soft matrices:

-   :attr:`neutrosophic_soft.matrices.LiteralProductKind`
-   :class:`neutrosophic_soft.matrices.BlockIndex`
-   :func:`neutrosophic_soft.matrices.block_index`
-   :func:`neutrosophic_soft.matrices.block_column`
-   :func:`neutrosophic_soft.matrices.block_indexes`
-   :func:`neutrosophic_soft.matrices.and_product`
-   :func:`neutrosophic_soft.matrices.or_product`
-   :attr:`neutrosophic_soft.matrices.PRODUCT_METHODS`
-   :func:`neutrosophic_soft.matrices.matrix_product`

Both products of two :math:`m \\times n` matrices :math:`[a_{ij}]` and
:math:`[b_{ik}]` are :math:`m \\times n^2` matrices :math:`[c_{ip}]` pairing
every column :math:`j` of the first matrix with every column :math:`k` of the
second one at column :math:`p = n(j - 1) + k`.
"""

from __future__ import annotations

from collections import namedtuple

from cachetools import LRUCache, cached
from colour.hints import Callable, Literal, Tuple
from colour.utilities import CanonicalMapping, attest, tstack, validate_method

from neutrosophic_soft.algebra import LiteralNorm, NormPair, as_norm_pair
from neutrosophic_soft.constants import SYMBOL_AND, SYMBOL_OR
from neutrosophic_soft.matrices.matrix import NsMatrix
from neutrosophic_soft.sets import ParameterSet
from neutrosophic_soft.utilities import check_labels_match

__author__ = "Neutrosophic Soft Developers"
__copyright__ = "Copyright 2026 Neutrosophic Soft Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Neutrosophic Soft Developers"
__status__ = "Production"

__all__ = [
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

LiteralProductKind = Literal["and", "or"]
"""Kinds of neutrosophic soft matrix products."""


def _operand_label(label: str) -> str:
    """
    Return given column label as an operand of a product column label, labels
    already joined by a connective are parenthesised.
    """

    if SYMBOL_AND in label or SYMBOL_OR in label:
        return f"({label})"

    return label


class BlockIndex(namedtuple("BlockIndex", ("j", "k", "p"))):
    """
    Define the 1-based position of a product column.

    Parameters
    ----------
    j
        Column of the first matrix in domain [1, n].
    k
        Column of the second matrix in domain [1, n].
    p
        Product column in domain [1, n**2], i.e., :math:`n(j - 1) + k`.
    """


def block_column(j: int, k: int, n: int) -> int:
    """
    Return the 1-based product column of given 1-based columns :math:`j` and
    :math:`k` of :math:`m \\times n` matrices.

    Examples
    --------
    >>> block_column(2, 1, 2)
    3
    """

    attest(
        1 <= j <= n and 1 <= k <= n,
        f"Columns {j} and {k} must be in range [1, {n}]!",
    )

    return n * (j - 1) + k


def block_index(p: int, n: int) -> BlockIndex:
    """
    Return the 1-based columns of the matrices paired at given 1-based product
    column :math:`p`, i.e., the inverse of :math:`p = n(j - 1) + k`.

    Parameters
    ----------
    p
        Product column in domain [1, n**2].
    n
        Columns count of the multiplied matrices.

    Returns
    -------
    :class:`neutrosophic_soft.matrices.BlockIndex`
        Block index.

    Examples
    --------
    >>> block_index(3, 2)
    BlockIndex(j=2, k=1, p=3)
    """

    attest(n >= 1, f"Columns count {n} must be greater than 0!")
    attest(1 <= p <= n * n, f"Product column {p} must be in range [1, {n * n}]!")

    j, remainder = divmod(p - 1, n)

    return BlockIndex(j + 1, remainder + 1, p)


@cached(cache=LRUCache(maxsize=32))
def block_indexes(n: int) -> Tuple[BlockIndex, ...]:
    """
    Return the block indexes of every product column of :math:`m \\times n`
    matrices in product column order.

    Examples
    --------
    >>> [tuple(index) for index in block_indexes(2)]
    [(1, 1, 1), (1, 2, 2), (2, 1, 3), (2, 2, 4)]
    """

    return tuple(block_index(p, n) for p in range(1, n * n + 1))


def _block_product(
    A: NsMatrix,
    B: NsMatrix,
    combine_T: Callable,
    combine_IF: Callable,
    symbol: str,
) -> NsMatrix:
    """
    Pair every column :math:`j` of the first matrix with every column
    :math:`k` of the second one, row by row, combining the truth-memberships
    with given first callable and the indeterminacy and falsity-memberships
    with given second callable.
    """

    check_labels_match(A.row_labels, B.row_labels, "row labels")
    check_labels_match(A.col_labels, B.col_labels, "column labels")

    m, n = A.shape

    # Axis 1 indexes "j", axis 2 indexes "k": flattening them yields
    # "p - 1 = n(j - 1) + (k - 1)".
    a = A.cells[:, :, None, :]
    b = B.cells[:, None, :, :]

    grid = tstack(
        [
            combine_T(a[..., 0], b[..., 0]),
            combine_IF(a[..., 1], b[..., 1]),
            combine_IF(a[..., 2], b[..., 2]),
        ]
    ).reshape(m, n * n, 3)

    labels = [_operand_label(label) for label in A.col_labels]
    col_labels = ParameterSet(
        [
            f"{labels[index.j - 1]}{symbol}{labels[index.k - 1]}"
            for index in block_indexes(n)
        ]
    )

    return NsMatrix._from_grid(grid, A.row_labels, col_labels)


def and_product(
    A: NsMatrix,
    B: NsMatrix,
    pair: NormPair | LiteralNorm | str = "minmax",
) -> NsMatrix:
    """
    Return the *And*-product of given neutrosophic soft matrices, i.e., the
    cells :math:`c_{ip} = (t(T^a_{ij}, T^b_{ik}), s(I^a_{ij}, I^b_{ik}),
    s(F^a_{ij}, F^b_{ik}))` with :math:`p = n(j - 1) + k`.

    Parameters
    ----------
    A
        First :math:`m \\times n` neutrosophic soft matrix.
    B
        Second :math:`m \\times n` neutrosophic soft matrix.
    pair
        Dual pair of t-norm :math:`t` and t-conorm :math:`s` or its name.

    Returns
    -------
    :class:`neutrosophic_soft.matrices.NsMatrix`
        :math:`m \\times n^2` product, columns are labelled by joining the
        parameters with :attr:`neutrosophic_soft.constants.SYMBOL_AND`.

    Raises
    ------
    ShapeMismatchError
        If the matrices do not share their labels.

    Examples
    --------
    >>> A = NsMatrix([[(1.0, 0.1, 0.1), (1.0, 0.4, 0.1)]])
    >>> B = NsMatrix([[(1.0, 0.7, 0.1), (1.0, 0.1, 0.1)]])
    >>> C = and_product(A, B)
    >>> C.shape
    (1, 4)
    >>> C[0, 0]
    NsValue(T=1.0, I=0.7, F=0.1)
    """

    pair = as_norm_pair(pair)

    return _block_product(A, B, pair.tnorm, pair.tconorm, SYMBOL_AND)


def or_product(
    A: NsMatrix,
    B: NsMatrix,
    pair: NormPair | LiteralNorm | str = "minmax",
) -> NsMatrix:
    """
    Return the *Or*-product of given neutrosophic soft matrices, i.e., the
    cells :math:`c_{ip} = (s(T^a_{ij}, T^b_{ik}), t(I^a_{ij}, I^b_{ik}),
    t(F^a_{ij}, F^b_{ik}))` with :math:`p = n(j - 1) + k`.

    Parameters
    ----------
    A
        First :math:`m \\times n` neutrosophic soft matrix.
    B
        Second :math:`m \\times n` neutrosophic soft matrix.
    pair
        Dual pair of t-norm :math:`t` and t-conorm :math:`s` or its name.

    Returns
    -------
    :class:`neutrosophic_soft.matrices.NsMatrix`
        :math:`m \\times n^2` product, columns are labelled by joining the
        parameters with :attr:`neutrosophic_soft.constants.SYMBOL_OR`.

    Raises
    ------
    ShapeMismatchError
        If the matrices do not share their labels.
    """

    pair = as_norm_pair(pair)

    return _block_product(A, B, pair.tconorm, pair.tnorm, SYMBOL_OR)


PRODUCT_METHODS: CanonicalMapping = CanonicalMapping(
    {
        "and": and_product,
        "or": or_product,
    }
)
PRODUCT_METHODS.__doc__ = """
Supported neutrosophic soft matrix products.
"""


def matrix_product(
    A: NsMatrix,
    B: NsMatrix,
    kind: LiteralProductKind | str = "and",
    pair: NormPair | LiteralNorm | str = "minmax",
) -> NsMatrix:
    """
    Return the product of given kind of given neutrosophic soft matrices.

    Parameters
    ----------
    A
        First :math:`m \\times n` neutrosophic soft matrix.
    B
        Second :math:`m \\times n` neutrosophic soft matrix.
    kind
        Product kind.
    pair
        Dual pair of t-norm and t-conorm or its name.

    Returns
    -------
    :class:`neutrosophic_soft.matrices.NsMatrix`
        :math:`m \\times n^2` product.

    Raises
    ------
    ValueError
        If the product kind is not supported.
    ShapeMismatchError
        If the matrices do not share their labels.
    """

    kind = validate_method(
        kind,
        tuple(PRODUCT_METHODS.keys()),
        '"{0}" product kind is invalid, it must be one of {1}!',
    )

    return PRODUCT_METHODS[kind](A, B, pair)
