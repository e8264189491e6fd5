"""Reading and writing schemes, walk logs and walk reports."""

from .converters import make_walk_converter, walk_report_to_json
from .scheme_file import canonical_order, canonicalize, parse, read_scheme, serialize, write_scheme
from .walk_log import format_walk_log

__all__ = [
    "canonical_order",
    "canonicalize",
    "format_walk_log",
    "make_walk_converter",
    "parse",
    "read_scheme",
    "serialize",
    "walk_report_to_json",
    "write_scheme",
]
