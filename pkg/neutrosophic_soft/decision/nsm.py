"""
Neutrosophic Soft Matrix Decision Making
========================================

Define the *min-max-max* decision making method on the products of the
neutrosophic soft matrices of two decision makers:

-   :class:`neutrosophic_soft.decision.DecisionTriple`
-   :class:`neutrosophic_soft.decision.ActiveBlocks`
-   :class:`neutrosophic_soft.decision.ObjectScore`
-   :class:`neutrosophic_soft.decision.DecisionOutcome`
-   :func:`neutrosophic_soft.decision.active_blocks`
-   :func:`neutrosophic_soft.decision.dmmm`
-   :func:`neutrosophic_soft.decision.score`
-   :func:`neutrosophic_soft.decision.optimum`
-   :func:`neutrosophic_soft.decision.nsm_decide`

The method runs as follows:

1.  Both decision makers describe the same objects with the same parameters,
    i.e., two :math:`m \\times n` matrices.
2.  Their *And*-product or *Or*-product, an :math:`m \\times n^2` matrix, is
    computed.
3.  The product columns are split in :math:`n` blocks of :math:`n` columns,
    the columns whose cells are all the zero value :math:`(0, 1, 1)` are
    ignored.
4.  Each block of each row is aggregated with
    :math:`(min(\\mu), max(\\nu), max(w))`, the blocks are then aggregated with
    :math:`(max(\\mu), max(\\nu), min(w))` into the decision triple
    :math:`d_i`.
5.  The objects are scored with :math:`s_i = \\mu_i - \\nu_i w_i`, the
    objects reaching the maximum score form the optimum.
"""

from __future__ import annotations

from collections import namedtuple
from math import isqrt

import numpy as np
from colour.hints import ArrayLike, NDArrayFloat, Sequence, Tuple
from colour.utilities import tsplit, warning

from neutrosophic_soft.algebra import ZERO_VALUE, LiteralNorm, NormPair
from neutrosophic_soft.constants import TOLERANCE_ABSOLUTE_SCORE
from neutrosophic_soft.matrices import (
    LiteralProductKind,
    NsMatrix,
    matrix_product,
)
from neutrosophic_soft.sets import Universe
from neutrosophic_soft.utilities import BlockStructureError, ShapeMismatchError

__author__ = "Neutrosophic Soft Developers"
__copyright__ = "Copyright 2026 Neutrosophic Soft Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Neutrosophic Soft Developers"
__status__ = "Production"

__all__ = [
    "DecisionTriple",
    "ActiveBlocks",
    "ObjectScore",
    "DecisionOutcome",
    "active_blocks",
    "dmmm",
    "score",
    "optimum",
    "nsm_decide",
]


class DecisionTriple(namedtuple("DecisionTriple", ("mu", "nu", "w"))):
    """
    Define the aggregated truth :math:`\\mu`, indeterminacy :math:`\\nu` and
    falsity :math:`w` of an object.

    Parameters
    ----------
    mu
        Aggregated truth-membership in domain [0, 1].
    nu
        Aggregated indeterminacy-membership in domain [0, 1].
    w
        Aggregated falsity-membership in domain [0, 1].
    """

    def __new__(cls, mu: float, nu: float, w: float) -> DecisionTriple:
        """Return a new instance with the components converted to floats."""

        return super().__new__(cls, float(mu), float(nu), float(w))


class ActiveBlocks(namedtuple("ActiveBlocks", ("n", "blocks"))):
    """
    Define the active columns of the blocks of an :math:`m \\times n^2`
    product matrix.

    Parameters
    ----------
    n
        Blocks count, i.e., the columns count of the multiplied matrices.
    blocks
        1-based active product columns :math:`I_k` of each block :math:`k`,
        block :math:`k` spanning the columns :math:`(k - 1)n < p \\leq kn`.
    """

    def block(self, k: int) -> frozenset:
        """Return the 1-based active product columns of 1-based block *k*."""

        return self.blocks[k - 1]

    def is_empty(self) -> bool:
        """Return whether every block is empty."""

        return not any(self.blocks)


class ObjectScore(namedtuple("ObjectScore", ("object", "d", "s"))):
    """
    Define the decision triple and the score of an object.

    Parameters
    ----------
    object
        Object label.
    d
        Decision triple :math:`d_i`.
    s
        Score :math:`s_i` in domain [-1, 1].
    """


class DecisionOutcome(namedtuple("DecisionOutcome", ("per_object", "optimum"))):
    """
    Define the outcome of a decision.

    Parameters
    ----------
    per_object
        :class:`neutrosophic_soft.decision.ObjectScore` of every object in
        universe order.
    optimum
        :class:`neutrosophic_soft.decision.ObjectScore` of the objects reaching
        the maximum score, ties included, in universe order.

    Attributes
    ----------
    -   :attr:`neutrosophic_soft.decision.DecisionOutcome.scores`
    -   :attr:`neutrosophic_soft.decision.DecisionOutcome.optimum_fuzzy_set`
    """

    @property
    def scores(self) -> Tuple[float, ...]:
        """
        Getter property for the scores in universe order.

        Returns
        -------
        :class:`tuple`
            Scores.
        """

        return tuple(object_score.s for object_score in self.per_object)

    @property
    def optimum_fuzzy_set(self) -> Tuple[ObjectScore, ...]:
        """
        Getter property for the optimum fuzzy set, i.e., the scores of the
        objects whose decision triple is not the zero value :math:`(0, 1, 1)`.

        Returns
        -------
        :class:`tuple`
            Optimum fuzzy set.
        """

        return tuple(
            object_score
            for object_score in self.per_object
            if tuple(object_score.d) != tuple(ZERO_VALUE)
        )


def _blocks_count(C: NsMatrix) -> int:
    """
    Return the blocks count :math:`n` of given :math:`m \\times n^2` product
    matrix.
    """

    columns = C.shape[1]
    n = isqrt(columns)

    if n * n != columns:
        raise BlockStructureError(
            f'"{columns}" columns count is not the square of a columns count, '
            f"product blocks cannot be formed!"
        )

    return n


def _active_columns(C: NsMatrix) -> NDArrayFloat:
    """
    Return the :math:`(n, n)` mask of the active product columns of given
    product matrix, indexed by block and column within the block.
    """

    n = _blocks_count(C)

    return np.any(np.any(C.cells != ZERO_VALUE, axis=-1), axis=0).reshape(n, n)


def active_blocks(C: NsMatrix) -> ActiveBlocks:
    """
    Return the active columns :math:`I_k` of each block of given product
    matrix, i.e., the columns with at least one cell differing from the zero
    value :math:`(0, 1, 1)`.

    Parameters
    ----------
    C
        :math:`m \\times n^2` product matrix.

    Returns
    -------
    :class:`neutrosophic_soft.decision.ActiveBlocks`
        Active blocks.

    Raises
    ------
    BlockStructureError
        If the columns count is not a square.

    Examples
    --------
    >>> C = NsMatrix(
    ...     [[(1, 0.7, 0.1), (0, 1, 1), (1, 0.7, 0.1), (1, 0.4, 0.1)]]
    ... )
    >>> blocks = active_blocks(C)
    >>> sorted(blocks.block(1)), sorted(blocks.block(2))
    ([1], [3, 4])
    """

    active = _active_columns(C)
    n = active.shape[0]

    return ActiveBlocks(
        n,
        tuple(
            frozenset(
                int(k * n + index + 1) for index in np.flatnonzero(active[k])
            )
            for k in range(n)
        ),
    )


def dmmm(C: NsMatrix) -> Tuple[DecisionTriple, ...]:
    """
    Return the *min-max-max* decision triples :math:`d_i` of the rows of
    given product matrix.

    Each block :math:`k` of row :math:`i` is aggregated over its active
    columns into :math:`t_{ik} = (min(\\mu_{ip}), max(\\nu_{ip}),
    max(w_{ip}))`, an empty block yielding the zero value :math:`(0, 1, 1)`.
    The blocks are aggregated into :math:`d_i = (max_k(\\mu'_{ik}),
    max_k(\\nu'_{ik}), min_k(w'_{ik}))`.

    Parameters
    ----------
    C
        :math:`m \\times n^2` product matrix.

    Returns
    -------
    :class:`tuple`
        Decision triples in row order.

    Raises
    ------
    BlockStructureError
        If the columns count is not a square.

    Examples
    --------
    >>> C = NsMatrix(
    ...     [[(1, 0.8, 0.1), (1, 0.8, 0.1), (1, 0.7, 0.1), (1, 0.7, 0.1)]]
    ... )
    >>> dmmm(C)
    (DecisionTriple(mu=1.0, nu=0.8, w=0.1),)
    """

    active = _active_columns(C)
    m, n = C.shape[0], active.shape[0]

    mu, nu, w = tsplit(C.cells.reshape(m, n, n, 3))

    # Inactive columns are neutralised for the block reductions.
    mu_b = np.min(np.where(active, mu, np.inf), axis=-1)
    nu_b = np.max(np.where(active, nu, -np.inf), axis=-1)
    w_b = np.max(np.where(active, w, -np.inf), axis=-1)

    non_empty = np.any(active, axis=-1)
    mu_b = np.where(non_empty, mu_b, ZERO_VALUE[0])
    nu_b = np.where(non_empty, nu_b, ZERO_VALUE[1])
    w_b = np.where(non_empty, w_b, ZERO_VALUE[2])

    return tuple(
        DecisionTriple(*d)
        for d in zip(
            np.max(mu_b, axis=-1), np.max(nu_b, axis=-1), np.min(w_b, axis=-1)
        )
    )


def score(d: DecisionTriple | ArrayLike) -> float:
    """
    Return the score :math:`s = \\mu - \\nu w` of given decision triple.

    Parameters
    ----------
    d
        Decision triple.

    Returns
    -------
    :class:`float`
        Score in domain [-1, 1].

    Examples
    --------
    >>> round(score(DecisionTriple(1, 0.8, 0.1)), 4)
    0.92
    >>> score((0, 1, 1))
    -1.0
    """

    mu, nu, w = (float(component) for component in d)

    return mu - nu * w


def optimum(
    U: Universe | Sequence[str], triples: Sequence[DecisionTriple | ArrayLike]
) -> DecisionOutcome:
    """
    Score given decision triples of given objects and select the optimum.

    Parameters
    ----------
    U
        Objects labels.
    triples
        Decision triples of the objects.

    Returns
    -------
    :class:`neutrosophic_soft.decision.DecisionOutcome`
        Decision outcome, every object reaching the maximum score, up to
        :attr:`neutrosophic_soft.constants.TOLERANCE_ABSOLUTE_SCORE`, is
        optimal.

    Raises
    ------
    ShapeMismatchError
        If the objects and triples counts differ.

    Examples
    --------
    >>> outcome = optimum(["u_1", "u_2"], [(1, 0.7, 0.1), (1, 0.5, 0.1)])
    >>> [object_score.object for object_score in outcome.optimum]
    ['u_2']
    """

    U = Universe(U)

    if len(U) != len(triples):
        raise ShapeMismatchError(
            f"{len(U)} objects cannot be paired with {len(triples)} decision "
            f"triples!"
        )

    per_object = []
    for u, d in zip(U, triples):
        d = DecisionTriple(*d)
        per_object.append(ObjectScore(u, d, score(d)))

    scores = np.array([object_score.s for object_score in per_object])
    tied = np.isclose(scores, np.max(scores), rtol=0, atol=TOLERANCE_ABSOLUTE_SCORE)

    return DecisionOutcome(
        tuple(per_object),
        tuple(
            object_score
            for object_score, is_tied in zip(per_object, tied)
            if is_tied
        ),
    )


def nsm_decide(
    A: NsMatrix,
    B: NsMatrix,
    kind: LiteralProductKind | str = "and",
    pair: NormPair | LiteralNorm | str = "minmax",
) -> DecisionOutcome:
    """
    Decide between the objects of given neutrosophic soft matrices of two
    decision makers.

    Parameters
    ----------
    A
        :math:`m \\times n` matrix of the first decision maker.
    B
        :math:`m \\times n` matrix of the second decision maker.
    kind
        Product kind.
    pair
        Dual pair of t-norm and t-conorm or its name used by the product.

    Returns
    -------
    :class:`neutrosophic_soft.decision.DecisionOutcome`
        Decision outcome.

    Raises
    ------
    ShapeMismatchError
        If the matrices do not share their labels.

    Examples
    --------
    >>> A = NsMatrix(
    ...     [
    ...         [(1.0, 0.1, 0.1), (1.0, 0.4, 0.1)],
    ...         [(1.0, 0.2, 0.1), (1.0, 0.1, 0.1)],
    ...         [(1.0, 0.8, 0.1), (1.0, 0.7, 0.1)],
    ...     ]
    ... )
    >>> B = NsMatrix(
    ...     [
    ...         [(1.0, 0.7, 0.1), (1.0, 0.1, 0.1)],
    ...         [(1.0, 0.5, 0.1), (1.0, 0.2, 0.1)],
    ...         [(1.0, 0.5, 0.1), (1.0, 0.5, 0.1)],
    ...     ]
    ... )
    >>> outcome = nsm_decide(A, B)
    >>> [(s.object, round(s.s, 4)) for s in outcome.per_object]
    [('u_1', 0.93), ('u_2', 0.95), ('u_3', 0.92)]
    >>> [s.object for s in outcome.optimum]
    ['u_2']
    """

    C = matrix_product(A, B, kind, pair)

    if active_blocks(C).is_empty():
        warning(
            "Every product column is the zero value, every object is scored "
            "-1 and is optimal!"
        )

    return optimum(C.row_labels, dmmm(C))

