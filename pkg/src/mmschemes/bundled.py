"""The schemes shipped with the package."""

import logging
from pathlib import Path

from cachetools import cached

from .models import Scheme, VerificationReport
from .serialization.scheme_file import read_scheme
from .verification import verify

_logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).parent.resolve().joinpath("data")

BUNDLED_SCHEMES = ("2x6x6_r56", "3x4x6_r56", "strassen")


def bundled_names() -> list[str]:
    return list(BUNDLED_SCHEMES)


def bundled_path(name: str) -> Path:
    """The path of a bundled scheme file; `name` may include the `.bms` suffix."""
    stem = name.removesuffix(".bms")
    if stem not in BUNDLED_SCHEMES:
        raise KeyError(f"No bundled scheme named '{name}'; choose from {', '.join(BUNDLED_SCHEMES)}")
    return DATA_DIR.joinpath(f"{stem}.bms")


@cached(cache={})
def load_bundled(name: str) -> Scheme:
    return read_scheme(bundled_path(name))


def certify_bundled() -> dict[str, VerificationReport]:
    """Verifies every bundled scheme, returning the report for each by name."""
    reports = {name: verify(load_bundled(name)) for name in BUNDLED_SCHEMES}
    for name, report in reports.items():
        if not report.valid:
            _logger.error("Bundled scheme %s fails %d equations", name, report.violated)
    return reports
