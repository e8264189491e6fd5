"""Exact verification of schemes against the Brent equations.

For the format (n, m, p) a scheme is correct exactly when

    sum_r a(r)[i, j] * b(r)[j', k] * c(r)[k', i'] == [i = i'][j = j'][k = k']

for every index 6-tuple, with arithmetic in the scheme's ring. There are n²m²p² such equations.
"""

import logging

import numpy as np
from cachetools import LRUCache, cached

from .exceptions import StructuralError
from .models import FactorPosition, Scheme, VerificationReport, expected_shapes

_logger = logging.getLogger(__name__)

_INT64_MAX = np.iinfo(np.int64).max


@cached(cache=LRUCache(maxsize=64))
def target_tensor(n: int, m: int, p: int) -> np.ndarray:
    """The matrix multiplication tensor with axes ordered (i, i', j, j', k, k').

    The returned array is read-only and shared between callers.
    """
    eye_n, eye_m, eye_p = (np.eye(d, dtype=np.int64) for d in (n, m, p))
    tensor = np.einsum("iI,jJ,kK->iIjJkK", eye_n, eye_m, eye_p)
    tensor.flags.writeable = False
    return tensor


def _check_structure(scheme: Scheme) -> None:
    shapes = expected_shapes(scheme.n, scheme.m, scheme.p)
    for index, term in enumerate(scheme.terms):
        for position, factor in zip(FactorPosition, term.factors):
            if factor.shape != shapes[position]:
                raise StructuralError(
                    f"Term {index}: factor {position.name} has shape {factor.shape}, expected {shapes[position]}",
                )


def _accumulator_dtype(scheme: Scheme) -> type | np.dtype:
    # Each equation sums at most `rank` products, so this bounds every accumulator.
    bound = sum(t.a.max_abs() * t.b.max_abs() * t.c.max_abs() for t in scheme.terms)
    if bound <= _INT64_MAX:
        return np.int64
    _logger.debug("Coefficient bound %d exceeds int64, verifying with Python integers", bound)
    return object


def scheme_tensor(scheme: Scheme) -> np.ndarray:
    """The tensor a scheme represents, with axes (i, i', j, j', k, k'), reduced into the scheme's ring."""
    _check_structure(scheme)
    n, m, p = scheme.format
    r = scheme.rank()
    dtype = _accumulator_dtype(scheme)
    a = np.array([t.a.entries for t in scheme.terms], dtype=dtype).reshape(r, n, m)
    b = np.array([t.b.entries for t in scheme.terms], dtype=dtype).reshape(r, m, p)
    c = np.array([t.c.entries for t in scheme.terms], dtype=dtype).reshape(r, p, n)
    tensor = np.einsum("rij,rJk,rKI->iIjJkK", a, b, c)
    if scheme.ring.modulus is not None:
        tensor = tensor % scheme.ring.modulus
    return tensor


def verify(scheme: Scheme) -> VerificationReport:
    """Checks every Brent equation of a scheme.

    All equations are evaluated; the report counts every failure and names the lexicographically smallest one.

    Args:
        scheme (Scheme): The scheme to check.

    Raises:
        StructuralError: A factor's shape does not match the scheme's format.

    Returns:
        VerificationReport: The verification result.
    """
    target = target_tensor(*scheme.format)
    failures = np.argwhere(scheme_tensor(scheme) != target)
    violated = len(failures)
    first = tuple(int(x) for x in failures[0]) if violated else None
    return VerificationReport(
        valid=violated == 0,
        violated=violated,
        equations=target.size,
        first_violation=first,  # type: ignore[arg-type]
    )


def is_valid(scheme: Scheme) -> bool:
    return verify(scheme).valid
