"""The table of known ranks for the formats (n, m, 6), 2 <= n <= m <= 6."""

import logging
from pathlib import Path

import pandas as pd
from cachetools import cached

from .models import Format, KnownRankEntry

_logger = logging.getLogger(__name__)

KNOWN_RANKS_PATH = Path(__file__).parent.resolve().joinpath("data", "known_ranks_nm6.tsv")

_COLUMNS = ["n", "m", "p", "naive", "best", "best_star", "ours"]


class KnownRankRegistry:
    """Lookup of naive, best known and flip-graph ranks by format."""

    def __init__(self, table_path: Path = KNOWN_RANKS_PATH) -> None:
        """Loads the table.

        Args:
            table_path (Path, optional): A tab-separated file with the columns n, m, p, naive, best, best_star, ours.
            Defaults to the bundled table.
        """
        df = pd.read_csv(table_path, sep="\t", dtype=int)
        missing = set(_COLUMNS) - set(df.columns)
        if missing:
            raise ValueError(f"Known-rank table {table_path} is missing columns: {', '.join(sorted(missing))}")
        entries = [
            KnownRankEntry(
                format=(int(row.n), int(row.m), int(row.p)),
                naive=int(row.naive),
                best=int(row.best),
                best_is_char_restricted=bool(row.best_star),
                ours=int(row.ours),
            )
            for row in df[_COLUMNS].itertuples(index=False)
        ]
        self._entries = {entry.format: entry for entry in entries}
        _logger.debug("Loaded %d known-rank entries from %s", len(self._entries), table_path)

    def lookup(self, fmt: Format) -> KnownRankEntry | None:
        return self._entries.get(tuple(fmt))  # type: ignore[arg-type]

    def entries(self) -> list[KnownRankEntry]:
        return list(self._entries.values())


@cached(cache={})
def default_registry() -> KnownRankRegistry:
    return KnownRankRegistry()


def known_ranks(fmt: Format) -> KnownRankEntry | None:
    """Returns the known-rank table row for `fmt`, or `None` if the table has no such row."""
    return default_registry().lookup(fmt)
