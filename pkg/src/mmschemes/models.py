"""Data model for bilinear matrix multiplication schemes.

A scheme for the format (n, m, p) is a list of rank-one terms A ⊗ B ⊗ C whose sum equals the matrix multiplication
tensor. The factors have shapes n×m, m×p and p×n; the third factor is stored p×n because the tensor's third leg
indexes c[k, i].
"""

import logging
from collections.abc import Callable, Iterable, Sequence
from enum import IntEnum

from attrs import field, frozen, validators

from utils.validators import is_format

from .exceptions import StructuralError
from .ring import RingSpec

_logger = logging.getLogger(__name__)

type Format = tuple[int, int, int]


class FactorPosition(IntEnum):
    """The position of a factor within a rank-one term."""

    A = 0
    B = 1
    C = 2

    @property
    def next(self) -> "FactorPosition":
        return FactorPosition((self + 1) % 3)

    @property
    def previous(self) -> "FactorPosition":
        return FactorPosition((self + 2) % 3)


def _check_entry_count(instance: "CoeffMatrix", _attribute: object, value: tuple[int, ...]) -> None:
    if len(value) != instance.rows * instance.cols:
        raise StructuralError(
            f"A {instance.rows}x{instance.cols} matrix needs {instance.rows * instance.cols} entries, got {len(value)}",
        )


@frozen(cache_hash=True)
class CoeffMatrix:
    """A small dense matrix of ring coefficients, stored row-major."""

    rows: int = field(validator=validators.ge(1))
    cols: int = field(validator=validators.ge(1))
    entries: tuple[int, ...] = field(converter=tuple, validator=_check_entry_count)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "CoeffMatrix":
        if not rows or not rows[0]:
            raise StructuralError("A coefficient matrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise StructuralError("All rows of a coefficient matrix must have the same length")
        return cls(len(rows), width, tuple(int(x) for row in rows for x in row))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "CoeffMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def unit(cls, rows: int, cols: int, row: int, col: int) -> "CoeffMatrix":
        """The matrix with a single 1 at (`row`, `col`), zero-based."""
        entries = [0] * (rows * cols)
        entries[row * cols + col] = 1
        return cls(rows, cols, tuple(entries))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: tuple[int, int]) -> int:
        row, col = index
        return self.entries[row * self.cols + col]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def to_rows(self) -> list[list[int]]:
        return [list(self.entries[r * self.cols : (r + 1) * self.cols]) for r in range(self.rows)]

    def nonzero(self) -> Iterable[tuple[int, int, int]]:
        """Yields `(row, col, value)` for the nonzero entries in row-major order."""
        for index, value in enumerate(self.entries):
            if value:
                yield (index // self.cols, index % self.cols, value)

    def map(self, fn: Callable[[int], int]) -> "CoeffMatrix":
        return CoeffMatrix(self.rows, self.cols, tuple(fn(x) for x in self.entries))

    def add(self, other: "CoeffMatrix", ring: RingSpec) -> "CoeffMatrix":
        self._check_same_shape(other)
        entries = tuple(ring.normalize(x + y) for x, y in zip(self.entries, other.entries))
        return CoeffMatrix(self.rows, self.cols, entries)

    def subtract(self, other: "CoeffMatrix", ring: RingSpec) -> "CoeffMatrix":
        self._check_same_shape(other)
        entries = tuple(ring.normalize(x - y) for x, y in zip(self.entries, other.entries))
        return CoeffMatrix(self.rows, self.cols, entries)

    def kron(self, other: "CoeffMatrix") -> "CoeffMatrix":
        """The Kronecker product in block form: the outer index comes from `self`, the inner from `other`."""
        rows = self.rows * other.rows
        cols = self.cols * other.cols
        entries = [0] * (rows * cols)
        for r1, c1, x in self.nonzero():
            for r2, c2, y in other.nonzero():
                entries[(r1 * other.rows + r2) * cols + c1 * other.cols + c2] = x * y
        return CoeffMatrix(rows, cols, tuple(entries))

    def embed(self, rows: int, cols: int, row_offset: int, col_offset: int) -> "CoeffMatrix":
        """Places this matrix as a block inside a larger zero matrix."""
        if row_offset + self.rows > rows or col_offset + self.cols > cols:
            raise StructuralError(f"A {self.rows}x{self.cols} block does not fit at ({row_offset}, {col_offset})")
        entries = [0] * (rows * cols)
        for r, c, x in self.nonzero():
            entries[(r + row_offset) * cols + c + col_offset] = x
        return CoeffMatrix(rows, cols, tuple(entries))

    def max_abs(self) -> int:
        return max(abs(x) for x in self.entries)

    def _check_same_shape(self, other: "CoeffMatrix") -> None:
        if self.shape != other.shape:
            raise StructuralError(f"Shape mismatch: {self.shape} and {other.shape}")


@frozen
class RankOneTerm:
    """A rank-one tensor A ⊗ B ⊗ C; one multiplication of the algorithm the scheme describes."""

    a: CoeffMatrix
    b: CoeffMatrix
    c: CoeffMatrix

    @property
    def factors(self) -> tuple[CoeffMatrix, CoeffMatrix, CoeffMatrix]:
        return (self.a, self.b, self.c)

    def factor(self, position: FactorPosition) -> CoeffMatrix:
        return self.factors[position]

    def with_factor(self, position: FactorPosition, value: CoeffMatrix) -> "RankOneTerm":
        factors = list(self.factors)
        factors[position] = value
        return RankOneTerm(*factors)

    def has_zero_factor(self) -> bool:
        return self.a.is_zero() or self.b.is_zero() or self.c.is_zero()

    def rotated(self) -> "RankOneTerm":
        """The term (B, C, A); the cyclic symmetry of the multiplication tensor."""
        return RankOneTerm(self.b, self.c, self.a)

    def map(self, fn: Callable[[int], int]) -> "RankOneTerm":
        return RankOneTerm(self.a.map(fn), self.b.map(fn), self.c.map(fn))


def expected_shapes(n: int, m: int, p: int) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
    return ((n, m), (m, p), (p, n))


def _check_terms(instance: "Scheme", _attribute: object, value: tuple[RankOneTerm, ...]) -> None:
    shapes = expected_shapes(instance.n, instance.m, instance.p)
    ring = instance.ring
    for index, term in enumerate(value):
        for position, factor in zip(FactorPosition, term.factors):
            if factor.shape != shapes[position]:
                raise StructuralError(
                    f"Term {index}: factor {position.name} has shape {factor.shape}, expected {shapes[position]}",
                )
            if factor.is_zero():
                raise StructuralError(f"Term {index}: factor {position.name} is zero")
            if ring.modulus is not None and not all(ring.is_canonical(x) for x in factor.entries):
                raise StructuralError(f"Term {index}: factor {position.name} has entries outside [0, {ring.modulus})")


@frozen
class Scheme:
    """A bilinear scheme for multiplying an n×m matrix by an m×p matrix.

    Schemes are immutable; every transformation returns a new scheme. Term order is significant in memory (walks refer
    to terms by index) and is only canonicalized when a scheme is written to a file.
    """

    n: int = field(validator=validators.ge(1))
    m: int = field(validator=validators.ge(1))
    p: int = field(validator=validators.ge(1))
    ring: RingSpec
    terms: tuple[RankOneTerm, ...] = field(converter=tuple, validator=_check_terms)

    @classmethod
    def create(cls, n: int, m: int, p: int, ring: RingSpec, terms: Iterable[RankOneTerm]) -> "Scheme":
        """Builds a scheme, normalizing coefficients into `ring` and dropping terms with a zero factor.

        Args:
            n (int): Rows of the left operand.
            m (int): Columns of the left operand and rows of the right operand.
            p (int): Columns of the right operand.
            ring (RingSpec): The coefficient ring.
            terms (Iterable[RankOneTerm]): The rank-one terms, in order.

        Returns:
            Scheme: The new scheme.
        """
        normalized = [term.map(ring.normalize) for term in terms] if ring.is_prime_field else list(terms)
        kept = [term for term in normalized if not term.has_zero_factor()]
        if len(kept) != len(normalized):
            _logger.debug("Dropped %d zero term(s) from a (%d,%d,%d) scheme", len(normalized) - len(kept), n, m, p)
        return cls(n, m, p, ring, tuple(kept))

    @property
    def format(self) -> Format:
        return (self.n, self.m, self.p)

    def rank(self) -> int:
        return len(self.terms)

    def naive_rank(self) -> int:
        return self.n * self.m * self.p

    def replace_terms(self, terms: Iterable[RankOneTerm]) -> "Scheme":
        """A scheme with the same format and ring and the given terms (zero terms dropped)."""
        return Scheme.create(self.n, self.m, self.p, self.ring, terms)

    def max_abs_coefficient(self) -> int:
        return max((f.max_abs() for t in self.terms for f in t.factors), default=0)

    def is_ternary(self) -> bool:
        """Whether every coefficient is -1, 0 or 1 (over Z_p, as a symmetric residue)."""
        if self.ring.modulus is None:
            return self.max_abs_coefficient() <= 1
        allowed = {0, 1, self.ring.modulus - 1}
        return all(x in allowed for t in self.terms for f in t.factors for x in f.entries)

    def nonzero_count(self) -> int:
        return sum(1 for t in self.terms for f in t.factors for x in f.entries if x)


@frozen(kw_only=True)
class VerificationReport:
    """The outcome of checking a scheme against the Brent equations.

    `first_violation` is the lexicographically smallest failing index `(i, i', j, j', k, k')`, zero-based.
    """

    valid: bool
    violated: int = field(validator=validators.ge(0))
    equations: int = field(validator=validators.ge(0))
    first_violation: tuple[int, int, int, int, int, int] | None = None


@frozen(kw_only=True)
class KnownRankEntry:
    """A row of the known-rank table for formats (n, m, 6)."""

    format: Format = field(converter=tuple, validator=is_format())
    naive: int = field(validator=validators.ge(1))
    best: int = field(validator=validators.ge(1))
    best_is_char_restricted: bool = field(converter=bool)
    ours: int = field(validator=validators.ge(1))

    def __attrs_post_init__(self) -> None:
        n, m, p = self.format
        if self.naive != n * m * p:
            raise ValueError(f"Naive rank of {self.format} must be {n * m * p}, got {self.naive}")
        if self.best > self.naive or self.ours > self.naive:
            raise ValueError(f"Ranks for {self.format} must not exceed the naive rank {self.naive}")

    def improves_on_best(self, rank: int) -> bool:
        return rank < self.best
