from .exceptions import (
    ValidationError,
    OutOfRangeError,
    DuplicateLabelError,
    DimensionMismatchError,
    MalformedDocumentError,
    ShapeMismatchError,
    BlockStructureError,
    UnknownNormError,
)
from .common import (
    default_labels,
    check_labels_match,
    json_decode,
    json_read,
    round_number,
    format_number,
)

__all__ = [
    "ValidationError",
    "OutOfRangeError",
    "DuplicateLabelError",
    "DimensionMismatchError",
    "MalformedDocumentError",
    "ShapeMismatchError",
    "BlockStructureError",
    "UnknownNormError",
]
__all__ += [
    "default_labels",
    "check_labels_match",
    "json_decode",
    "json_read",
    "round_number",
    "format_number",
]
