from .configuration import (
    ENVIRONMENT_VARIABLE_PRECISION,
    DEFAULT_CONFIGURATION,
    Configuration,
    use_defaults,
    defaults,
)
from .documents import (
    DOCUMENT_KEYS,
    matrix_from_data,
    parse_matrix,
    parse_soft_set,
    read_matrix,
    serialize_matrix,
    write_text,
    format_outcome_table,
    format_outcome_json,
    format_shape_report,
)

__all__ = [
    "ENVIRONMENT_VARIABLE_PRECISION",
    "DEFAULT_CONFIGURATION",
    "Configuration",
    "use_defaults",
    "defaults",
]
__all__ += [
    "DOCUMENT_KEYS",
    "matrix_from_data",
    "parse_matrix",
    "parse_soft_set",
    "read_matrix",
    "serialize_matrix",
    "write_text",
    "format_outcome_table",
    "format_outcome_json",
    "format_shape_report",
]
