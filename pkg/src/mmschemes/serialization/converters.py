"""This module configures the converters for JSON serialization of walk configurations and reports."""

from typing import Any

from cattrs.preconf.json import JsonConverter
from cattrs.preconf.json import make_converter as make_json_converter

from ..models import Scheme
from ..search.walk import WalkReport


def _unstructure_scheme(s: Scheme) -> dict[str, Any]:
    return {"format": list(s.format), "ring": str(s.ring), "rank": s.rank()}


def make_walk_converter() -> JsonConverter:
    """Creates a converter for walk configurations and walk report summaries.

    Schemes are summarized by format, ring and rank; the scheme itself is written separately in the `bms` format.

    Returns:
        JsonConverter: The JSON converter.
    """
    converter = make_json_converter()
    converter.register_unstructure_hook(Scheme, _unstructure_scheme)
    return converter


def walk_report_to_json(report: WalkReport, converter: JsonConverter | None = None) -> str:
    converter = converter or make_walk_converter()
    return converter.dumps(report, indent=2, sort_keys=True) + "\n"
