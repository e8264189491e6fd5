"""Flip-graph search: moves, reductions and seeded random walks."""

from .flips import FlipDirection, FlipMove, apply_flip, enumerate_flips, is_admissible, reduce
from .parallel import mix_seed, parallel_search, run_walkers
from .walk import (
    ReductionPolicy,
    TrajectoryPoint,
    WalkConfig,
    WalkReport,
    check_walkable,
    make_generator,
    random_walk,
)

__all__ = [
    "FlipDirection",
    "FlipMove",
    "ReductionPolicy",
    "TrajectoryPoint",
    "WalkConfig",
    "WalkReport",
    "apply_flip",
    "check_walkable",
    "enumerate_flips",
    "is_admissible",
    "make_generator",
    "mix_seed",
    "parallel_search",
    "random_walk",
    "reduce",
    "run_walkers",
]
