"""Random walks in the flip graph, starting from a valid scheme over a prime field."""

import logging
from enum import StrEnum

import numpy as np
from attrs import field, frozen, validators

from ..exceptions import SearchInvariantError, WalkRejectedError
from ..models import Scheme
from ..verification import verify
from .flips import apply_flip, enumerate_flips, reduce

_logger = logging.getLogger(__name__)

SEED_LIMIT = 2**64


class ReductionPolicy(StrEnum):
    EAGER = "eager"


@frozen(kw_only=True)
class WalkConfig:
    """Parameters of a single walk.

    Attributes:
        seed: Seed of the PCG64 generator that picks flips, in [0, 2**64).
        max_steps: Number of flips to perform at most.
        reduction_policy: When reductions are applied; only eager reduction after every flip is supported.
        restart_after: Restart from the input scheme after this many flips without the current rank decreasing.
        target_rank: Stop as soon as the best rank is at most this value.
        checkpoint_every: Re-verify the best scheme every this many steps.
    """

    seed: int = field(validator=[validators.ge(0), validators.lt(SEED_LIMIT)])
    max_steps: int = field(validator=validators.ge(0))
    reduction_policy: ReductionPolicy = field(default=ReductionPolicy.EAGER, converter=ReductionPolicy)
    restart_after: int | None = field(default=None, validator=validators.optional(validators.ge(1)))
    target_rank: int | None = field(default=None, validator=validators.optional(validators.ge(0)))
    checkpoint_every: int = field(default=1000, validator=validators.ge(1))


@frozen
class TrajectoryPoint:
    step: int
    rank: int


@frozen(kw_only=True)
class WalkReport:
    """The trace of a walk: every improvement of the best rank, and the best scheme found."""

    seed: int
    start_rank: int
    best_rank: int
    steps_taken: int
    rank_trajectory: tuple[TrajectoryPoint, ...] = field(converter=tuple)
    best_scheme: Scheme
    restarts: int = 0


def make_generator(seed: int) -> np.random.Generator:
    """The generator behind every walk: numpy's PCG64 seeded with `seed`."""
    return np.random.Generator(np.random.PCG64(seed))


def check_walkable(s: Scheme) -> None:
    """Raises `WalkRejectedError` unless `s` is a valid scheme over a prime field."""
    if not s.ring.is_prime_field:
        raise WalkRejectedError(f"Walks require a prime field, this scheme is over {s.ring}")
    report = verify(s)
    if not report.valid:
        raise WalkRejectedError(f"Walks must start from a valid scheme; {report.violated} equations fail")


def _certify(scheme: Scheme, step: int) -> None:
    report = verify(scheme)
    if not report.valid:
        raise SearchInvariantError(step, report.violated)
    _logger.debug("Checkpoint at step %d: rank %d certified", step, scheme.rank())


def random_walk(s: Scheme, cfg: WalkConfig) -> WalkReport:
    """Walks the flip graph from `s`, reducing eagerly after every flip.

    Each step picks one admissible flip uniformly at random from `enumerate_flips` of the current scheme. The walk is
    fully determined by `s` and `cfg`.

    Args:
        s (Scheme): A valid scheme over a prime field.
        cfg (WalkConfig): The walk parameters.

    Raises:
        WalkRejectedError: `s` is invalid or not over a prime field.
        SearchInvariantError: A checkpoint found that the best scheme no longer verifies.

    Returns:
        WalkReport: The walk's trace and best scheme.
    """
    check_walkable(s)
    rng = make_generator(cfg.seed)
    current = s
    best = s
    trajectory: list[TrajectoryPoint] = []
    steps = 0
    restarts = 0
    plateau = 0

    while steps < cfg.max_steps:
        if cfg.target_rank is not None and best.rank() <= cfg.target_rank:
            break
        moves = enumerate_flips(current)
        if not moves:
            if cfg.restart_after is None or current is s:
                _logger.debug("Seed %d: no admissible flips at step %d", cfg.seed, steps)
                break
            current, plateau = s, 0
            restarts += 1
            continue

        previous_rank = current.rank()
        current = reduce(apply_flip(current, moves[int(rng.integers(len(moves)))]))
        steps += 1
        plateau = 0 if current.rank() < previous_rank else plateau + 1

        if current.rank() < best.rank():
            best = current
            trajectory.append(TrajectoryPoint(steps, best.rank()))
            _logger.info("Seed %d: rank %d at step %d", cfg.seed, best.rank(), steps)
        elif cfg.restart_after is not None and plateau >= cfg.restart_after:
            _logger.debug("Seed %d: restarting after %d flips without progress", cfg.seed, plateau)
            current, plateau = s, 0
            restarts += 1

        if steps % cfg.checkpoint_every == 0:
            _certify(best, steps)

    _certify(best, steps)
    return WalkReport(
        seed=cfg.seed,
        start_rank=s.rank(),
        best_rank=best.rank(),
        steps_taken=steps,
        rank_trajectory=trajectory,
        best_scheme=best,
        restarts=restarts,
    )
