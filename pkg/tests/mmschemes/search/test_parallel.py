import time

import pytest

from mmschemes.generators import standard_scheme
from mmschemes.ring import RingSpec
from mmschemes.search.parallel import mix_seed, parallel_search, run_walkers
from mmschemes.search.walk import WalkConfig, random_walk
from mmschemes.serialization import serialize
from mmschemes.verification import verify

Z2 = RingSpec.prime_field(2)


def describe_mix_seed():
    def is_deterministic():
        assert mix_seed(12345, 3) == mix_seed(12345, 3)

    def gives_distinct_64_bit_seeds():
        seeds = [mix_seed(0, index) for index in range(64)]

        assert len(set(seeds)) == 64
        assert all(0 <= seed < 2**64 for seed in seeds)

    def depends_on_the_search_seed():
        assert mix_seed(1, 0) != mix_seed(2, 0)


def describe_run_walkers():
    def rejects_zero_walkers():
        with pytest.raises(ValueError):
            run_walkers(standard_scheme(2, 2, 2, Z2), WalkConfig(seed=0, max_steps=1), 0)

    def gives_each_walker_its_mixed_seed():
        reports = run_walkers(standard_scheme(2, 2, 2, Z2), WalkConfig(seed=99, max_steps=10), 3, max_workers=1)

        assert [report.seed for report in reports] == [mix_seed(99, index) for index in range(3)]

    def does_not_depend_on_scheduling():
        # *** ARRANGE ***
        s = standard_scheme(2, 2, 3, Z2)
        cfg = WalkConfig(seed=17, max_steps=300)

        # *** ACT ***
        sequential = run_walkers(s, cfg, 4, max_workers=1)
        pooled = run_walkers(s, cfg, 4, max_workers=2)

        # *** ASSERT ***
        assert sequential == pooled


def describe_parallel_search():
    def with_one_walker_matches_a_single_walk():
        # *** ARRANGE ***
        s = standard_scheme(2, 2, 2, Z2)
        cfg = WalkConfig(seed=2718, max_steps=200)

        # *** ACT ***
        report = parallel_search(s, cfg, 1)

        # *** ASSERT ***
        assert report == random_walk(s, WalkConfig(seed=mix_seed(2718, 0), max_steps=200))

    def picks_the_lowest_rank_and_then_the_lowest_walker():
        # *** ARRANGE ***
        s = standard_scheme(2, 2, 3, Z2)
        cfg = WalkConfig(seed=31, max_steps=400)
        reports = run_walkers(s, cfg, 6, max_workers=1)
        best_rank = min(report.best_rank for report in reports)
        expected = next(report for report in reports if report.best_rank == best_rank)

        # *** ACT ***
        report = parallel_search(s, cfg, 6, max_workers=1)

        # *** ASSERT ***
        assert report == expected

    def finds_a_rank_7_scheme_for_2x2_and_replays_exactly():
        # *** ARRANGE ***
        s = standard_scheme(2, 2, 2, Z2)
        cfg = WalkConfig(seed=20230215, max_steps=100_000, target_rank=7, restart_after=2000)

        # *** ACT ***
        started = time.perf_counter()
        first = parallel_search(s, cfg, 32)
        elapsed = time.perf_counter() - started
        second = parallel_search(s, cfg, 32)

        # *** ASSERT ***
        assert first.best_rank <= 7
        assert verify(first.best_scheme).valid
        assert elapsed < 60
        assert serialize(first.best_scheme) == serialize(second.best_scheme)
        assert first == second
