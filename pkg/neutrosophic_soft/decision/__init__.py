from .nsm import (
    DecisionTriple,
    ActiveBlocks,
    ObjectScore,
    DecisionOutcome,
    active_blocks,
    dmmm,
    score,
    optimum,
    nsm_decide,
)

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
