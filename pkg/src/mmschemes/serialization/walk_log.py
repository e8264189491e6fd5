"""Walk logs: one `step rank seed` line per improvement of a walk's best rank."""

from ..search.walk import WalkReport


def format_walk_log(report: WalkReport) -> str:
    return "".join(f"{point.step} {point.rank} {report.seed}\n" for point in report.rank_trajectory)
