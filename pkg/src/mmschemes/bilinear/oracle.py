"""Seeded comparison of a program against the classical algorithm."""

import logging

import numpy as np
from attrs import frozen

from .evaluation import evaluate, naive_multiply
from .program import BilinearProgram
from .rings import SamplingRing

_logger = logging.getLogger(__name__)


@frozen(kw_only=True)
class EquivalenceReport:
    """The outcome of an oracle comparison; `first_mismatch` is `(trial, row, col)` of the first differing entry."""

    trials: int
    mismatches: int
    first_mismatch: tuple[int, int, int] | None = None

    @property
    def equivalent(self) -> bool:
        return self.mismatches == 0


def check_equivalence[T](prog: BilinearProgram, algebra: SamplingRing[T], trials: int, seed: int) -> EquivalenceReport:
    """Evaluates `prog` and the classical algorithm on `trials` random operand pairs and compares every entry.

    Operands are drawn with `algebra.sample` from a PCG64 generator seeded with `seed`, so a report can be reproduced
    exactly. A trial counts as a mismatch when any output entry differs.
    """
    if trials < 0:
        raise ValueError(f"Trial count must not be negative, got {trials}")
    rng = np.random.default_rng(seed)
    mismatches = 0
    first: tuple[int, int, int] | None = None
    for trial in range(trials):
        x = [[algebra.sample(rng) for _ in range(prog.m)] for _ in range(prog.n)]
        y = [[algebra.sample(rng) for _ in range(prog.p)] for _ in range(prog.m)]
        actual = evaluate(prog, x, y, algebra)
        expected = naive_multiply(x, y, algebra)
        differing = [
            (i, k) for i in range(prog.n) for k in range(prog.p) if not algebra.equals(actual[i][k], expected[i][k])
        ]
        if differing:
            mismatches += 1
            if first is None:
                first = (trial, *differing[0])
                _logger.debug("Trial %d: first differing entry at %s", trial, differing[0])
    return EquivalenceReport(trials=trials, mismatches=mismatches, first_mismatch=first)
