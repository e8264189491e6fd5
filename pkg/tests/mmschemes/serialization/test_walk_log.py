import pytest

from mmschemes import RingSpec, strassen_scheme
from mmschemes.search.walk import TrajectoryPoint, WalkReport
from mmschemes.serialization.walk_log import format_walk_log


@pytest.fixture
def report() -> WalkReport:
    return WalkReport(
        seed=42,
        start_rank=8,
        best_rank=7,
        steps_taken=120,
        rank_trajectory=[TrajectoryPoint(17, 7)],
        best_scheme=strassen_scheme(RingSpec.prime_field(2)),
    )


def describe_format_walk_log():
    def writes_one_line_per_improvement(report: WalkReport):
        assert format_walk_log(report) == "17 7 42\n"

    def is_empty_without_improvements(report: WalkReport):
        unchanged = WalkReport(
            seed=report.seed,
            start_rank=7,
            best_rank=7,
            steps_taken=0,
            rank_trajectory=[],
            best_scheme=report.best_scheme,
        )

        assert format_walk_log(unchanged) == ""
