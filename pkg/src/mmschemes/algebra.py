"""Transformations between schemes: Kronecker composition, block direct sums, cyclic rotation and reduction mod p."""

import logging
from enum import StrEnum

from utils.validators import MAX_MODULUS, is_prime_modulus

from .exceptions import FormatMismatchError, RingError, StructuralError
from .models import RankOneTerm, Scheme
from .ring import RingSpec

_logger = logging.getLogger(__name__)


class SplitAxis(StrEnum):
    """The dimension along which `direct_sum` places two schemes side by side."""

    ROWS = "rows"
    MIDDLE = "middle"
    COLS = "cols"


def _check_same_ring(s: Scheme, t: Scheme) -> None:
    if s.ring != t.ring:
        raise RingError(f"Ring mismatch: {s.ring} and {t.ring}")


def kronecker(s: Scheme, t: Scheme) -> Scheme:
    """The tensor product of two schemes.

    The result multiplies formats and ranks: (s.n·t.n, s.m·t.m, s.p·t.p) with rank s.rank·t.rank. Terms are
    enumerated with the index into `s` outermost.

    Raises:
        RingError: The schemes are over different rings.
    """
    _check_same_ring(s, t)
    terms = [
        RankOneTerm(ts.a.kron(tt.a), ts.b.kron(tt.b), ts.c.kron(tt.c)) for ts in s.terms for tt in t.terms
    ]
    return Scheme.create(s.n * t.n, s.m * t.m, s.p * t.p, s.ring, terms)


def direct_sum(s: Scheme, t: Scheme, axis: SplitAxis) -> Scheme:
    """Combines two schemes into one for a format that is split along `axis`.

    `s` occupies the low-index block and `t` the high-index block of the split dimension:

    * ROWS (n = s.n + t.n): A factors stack vertically, C factors side by side, B is shared.
    * MIDDLE (m = s.m + t.m): A factors side by side, B factors stack vertically, C is shared.
    * COLS (p = s.p + t.p): B factors side by side, C factors stack vertically, A is shared.

    Raises:
        StructuralError: Either scheme has no terms.
        FormatMismatchError: The two non-split dimensions differ.
        RingError: The schemes are over different rings.
    """
    _check_same_ring(s, t)
    if s.rank() == 0 or t.rank() == 0:
        raise StructuralError("Both schemes of a direct sum must have at least one term")
    axis = SplitAxis(axis)
    keep = {SplitAxis.ROWS: (1, 2), SplitAxis.MIDDLE: (0, 2), SplitAxis.COLS: (0, 1)}[axis]
    if any(s.format[i] != t.format[i] for i in keep):
        raise FormatMismatchError(
            f"Formats {s.format} and {t.format} cannot be joined along {axis}",
            s.format,
            t.format,
        )

    match axis:
        case SplitAxis.ROWS:
            n, m, p = s.n + t.n, s.m, s.p

            def place(term: RankOneTerm, offset: int) -> RankOneTerm:
                return RankOneTerm(term.a.embed(n, m, offset, 0), term.b, term.c.embed(p, n, 0, offset))

            offset = s.n
        case SplitAxis.MIDDLE:
            n, m, p = s.n, s.m + t.m, s.p

            def place(term: RankOneTerm, offset: int) -> RankOneTerm:
                return RankOneTerm(term.a.embed(n, m, 0, offset), term.b.embed(m, p, offset, 0), term.c)

            offset = s.m
        case SplitAxis.COLS:
            n, m, p = s.n, s.m, s.p + t.p

            def place(term: RankOneTerm, offset: int) -> RankOneTerm:
                return RankOneTerm(term.a, term.b.embed(m, p, 0, offset), term.c.embed(p, n, offset, 0))

            offset = s.p

    terms = [place(term, 0) for term in s.terms] + [place(term, offset) for term in t.terms]
    return Scheme(n, m, p, s.ring, tuple(terms))


def rotate(s: Scheme) -> Scheme:
    """Cycles every term (A, B, C) to (B, C, A), giving a scheme of the same rank for (m, p, n).

    Term order is preserved, so three rotations give back the original scheme exactly.
    """
    return Scheme(s.m, s.p, s.n, s.ring, tuple(term.rotated() for term in s.terms))


def mod_reduce(s: Scheme, p: int) -> Scheme:
    """Maps an integer scheme into Z_p.

    Terms whose factors vanish mod p are dropped, so the rank can decrease.

    Raises:
        RingError: `p` is not prime, or `s` is not over the integers.
    """
    if not is_prime_modulus(p):
        raise RingError(f"Modulus {p} is not a prime no larger than {MAX_MODULUS}")
    if s.ring.is_prime_field:
        raise RingError(f"Only integer schemes can be reduced, this scheme is over {s.ring}")
    result = Scheme.create(s.n, s.m, s.p, RingSpec.prime_field(p), s.terms)
    if result.rank() < s.rank():
        _logger.info("Reduction mod %d dropped %d term(s)", p, s.rank() - result.rank())
    return result
