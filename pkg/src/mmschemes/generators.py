"""Generators for reference schemes."""

from .models import CoeffMatrix, RankOneTerm, Scheme
from .ring import RingSpec

# Strassen's seven products, written as (A, B, C) factor matrices in the a[i,j] ⊗ b[j,k] ⊗ c[k,i] convention:
#   (a11 + a22) ⊗ (b11 + b22) ⊗ (c11 + c22)
#   (a21 + a22) ⊗ b11 ⊗ (c12 - c22)
#   a11 ⊗ (b12 - b22) ⊗ (c21 + c22)
#   a22 ⊗ (b21 - b11) ⊗ (c11 + c12)
#   (a11 + a12) ⊗ b22 ⊗ (c21 - c11)
#   (a21 - a11) ⊗ (b11 + b12) ⊗ c22
#   (a12 - a22) ⊗ (b21 + b22) ⊗ c11
_STRASSEN = (
    (((1, 0), (0, 1)), ((1, 0), (0, 1)), ((1, 0), (0, 1))),
    (((0, 0), (1, 1)), ((1, 0), (0, 0)), ((0, 1), (0, -1))),
    (((1, 0), (0, 0)), ((0, 1), (0, -1)), ((0, 0), (1, 1))),
    (((0, 0), (0, 1)), ((-1, 0), (1, 0)), ((1, 1), (0, 0))),
    (((1, 1), (0, 0)), ((0, 0), (0, 1)), ((-1, 0), (1, 0))),
    (((-1, 0), (1, 0)), ((1, 1), (0, 0)), ((0, 0), (0, 1))),
    (((0, 1), (0, -1)), ((0, 0), (1, 1)), ((1, 0), (0, 0))),
)


def standard_scheme(n: int, m: int, p: int, ring: RingSpec | None = None) -> Scheme:
    """The classical algorithm as a scheme of rank nmp.

    Terms are listed with i outermost, then k, then j, so the first two terms of (2,2,2) are a11 ⊗ b11 ⊗ c11 and
    a12 ⊗ b21 ⊗ c11.

    Args:
        n (int): Rows of the left operand.
        m (int): Inner dimension.
        p (int): Columns of the right operand.
        ring (RingSpec | None, optional): The coefficient ring. Defaults to the integers.

    Returns:
        Scheme: The standard scheme.
    """
    if min(n, m, p) < 1:
        raise ValueError(f"Format dimensions must be positive: ({n},{m},{p})")
    terms = [
        RankOneTerm(CoeffMatrix.unit(n, m, i, j), CoeffMatrix.unit(m, p, j, k), CoeffMatrix.unit(p, n, k, i))
        for i in range(n)
        for k in range(p)
        for j in range(m)
    ]
    return Scheme(n, m, p, ring or RingSpec.integers(), tuple(terms))


def strassen_scheme(ring: RingSpec | None = None) -> Scheme:
    """Strassen's rank-7 scheme for (2,2,2), with coefficients mapped into `ring` (Z by default)."""
    terms = [
        RankOneTerm(CoeffMatrix.from_rows(a), CoeffMatrix.from_rows(b), CoeffMatrix.from_rows(c))
        for a, b, c in _STRASSEN
    ]
    return Scheme.create(2, 2, 2, ring or RingSpec.integers(), terms)
