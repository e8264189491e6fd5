"""Independent walkers with deterministically derived seeds."""

import logging
from concurrent.futures import ProcessPoolExecutor

import attrs
import numpy as np

from ..models import Scheme
from .walk import WalkConfig, WalkReport, check_walkable, random_walk

_logger = logging.getLogger(__name__)


def mix_seed(seed: int, index: int) -> int:
    """The seed of walker `index` for a search seeded with `seed`.

    This is the first 64-bit word generated by `numpy.random.SeedSequence(seed, spawn_key=(index,))`, which is stable
    across platforms and numpy versions.
    """
    state = np.random.SeedSequence(seed, spawn_key=(index,)).generate_state(1, np.uint64)
    return int(state[0])


def run_walkers(s: Scheme, cfg: WalkConfig, walkers: int, max_workers: int | None = None) -> list[WalkReport]:
    """Runs `walkers` independent walks and returns their reports in walker order.

    Walker `i` uses the seed `mix_seed(cfg.seed, i)`; every other parameter is taken from `cfg`. Since walkers share
    no state, the reports do not depend on how they are scheduled.

    Args:
        s (Scheme): The starting scheme, valid and over a prime field.
        cfg (WalkConfig): The walk parameters; `cfg.seed` is the search seed.
        walkers (int): The number of walkers, at least 1.
        max_workers (int | None, optional): The process pool size. `None` or 0 uses one process per CPU, 1 runs the
        walkers sequentially in this process.

    Returns:
        list[WalkReport]: One report per walker.
    """
    if walkers < 1:
        raise ValueError(f"At least one walker is required, got {walkers}")
    check_walkable(s)
    configs = [attrs.evolve(cfg, seed=mix_seed(cfg.seed, index)) for index in range(walkers)]

    if walkers == 1 or max_workers == 1:
        reports = [random_walk(s, walker_cfg) for walker_cfg in configs]
    else:
        with ProcessPoolExecutor(max_workers=max_workers or None) as executor:
            reports = list(executor.map(random_walk, [s] * walkers, configs))

    for index, report in enumerate(reports):
        _logger.info(
            "Walker %d (seed %d): rank %d -> %d in %d steps",
            index,
            report.seed,
            report.start_rank,
            report.best_rank,
            report.steps_taken,
        )
    return reports


def parallel_search(
    s: Scheme,
    cfg: WalkConfig,
    walkers: int,
    max_workers: int | None = None,
) -> WalkReport:
    """Runs independent walkers and returns the report with the lowest best rank.

    Ties go to the walker with the lowest index, so the result depends only on `s`, `cfg` and `walkers`.
    """
    reports = run_walkers(s, cfg, walkers, max_workers)
    winner = min(range(len(reports)), key=lambda index: (reports[index].best_rank, index))
    return reports[winner]
