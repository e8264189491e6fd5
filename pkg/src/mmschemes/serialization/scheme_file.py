"""The `bms v1` scheme file format.

A file is a header line followed by one block per term::

    bms v1 <n> <m> <p> <rank> <ring>

where `<ring>` is `Z` or `Zp <p>`, p being a prime no larger than 2**31. A block holds the A factor (n lines of m
integers), a blank line, the B factor (m lines of p integers), a blank line, the C factor (p lines of n integers) and a
blank line. Integers are decimal, optionally signed, separated by single spaces. Lines end in LF and the file ends
with a single newline after the last block's blank line. Over Z_p every entry lies in [0, p).

Files written by `serialize` list terms in canonical order; parsed schemes keep the order of the file.
"""

import logging
import re
from pathlib import Path

from utils.validators import MAX_MODULUS, is_prime_modulus

from ..exceptions import ParseErrorCode, SchemeFileError
from ..models import CoeffMatrix, RankOneTerm, Scheme, expected_shapes
from ..ring import RingSpec

_logger = logging.getLogger(__name__)

MAGIC = "bms"
VERSION = "v1"

_INTEGER = re.compile(r"[+-]?[0-9]+")
_DIMENSION = re.compile(r"[0-9]+")
_VERSION = re.compile(r"v[0-9]+")


def _decode(data: bytes | str) -> str:
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as ex:
        line = data[: ex.start].count(b"\n") + 1
        raise SchemeFileError(ParseErrorCode.BAD_ENCODING, line, "File is not valid UTF-8") from ex


def _split_integers(line: str) -> list[str] | None:
    tokens = line.split(" ")
    return tokens if all(_INTEGER.fullmatch(token) for token in tokens) else None


def _parse_header(line: str) -> tuple[int, int, int, int, RingSpec]:
    tokens = line.split(" ")
    if not line or tokens[0] != MAGIC:
        raise SchemeFileError(ParseErrorCode.MALFORMED_HEADER, 1, f"Header must start with '{MAGIC}'")
    if len(tokens) < 2 or tokens[1] != VERSION:
        if len(tokens) >= 2 and _VERSION.fullmatch(tokens[1]):
            raise SchemeFileError(ParseErrorCode.UNSUPPORTED_VERSION, 1, f"Unsupported format version '{tokens[1]}'")
        raise SchemeFileError(ParseErrorCode.MALFORMED_HEADER, 1, f"Expected version '{VERSION}' after '{MAGIC}'")
    dimensions = tokens[2:6]
    if len(dimensions) != 4 or not all(_DIMENSION.fullmatch(token) for token in dimensions):
        raise SchemeFileError(ParseErrorCode.MALFORMED_HEADER, 1, "Expected '<n> <m> <p> <rank>' after the version")
    n, m, p, rank = (int(token) for token in dimensions)
    if min(n, m, p) < 1:
        raise SchemeFileError(ParseErrorCode.MALFORMED_HEADER, 1, f"Format ({n},{m},{p}) must be positive")

    ring_tokens = tokens[6:]
    match ring_tokens:
        case ["Z"]:
            ring = RingSpec.integers()
        case ["Zp", modulus] if _DIMENSION.fullmatch(modulus) and int(modulus) > MAX_MODULUS:
            raise SchemeFileError(ParseErrorCode.BAD_RING, 1, f"Modulus {modulus} is larger than {MAX_MODULUS}")
        case ["Zp", modulus] if _DIMENSION.fullmatch(modulus) and is_prime_modulus(int(modulus)):
            ring = RingSpec.prime_field(int(modulus))
        case _:
            raise SchemeFileError(
                ParseErrorCode.BAD_RING,
                1,
                f"Ring '{' '.join(ring_tokens)}' is not 'Z' or 'Zp <prime>'",
            )
    return n, m, p, rank, ring


class _BlockReader:
    def __init__(self, lines: list[str], ring: RingSpec) -> None:
        self._lines = lines
        self._ring = ring
        self.cursor = 1

    @property
    def at_end(self) -> bool:
        return self.cursor >= len(self._lines)

    @property
    def line_number(self) -> int:
        return self.cursor + 1

    def _fail(self, code: ParseErrorCode, detail: str) -> SchemeFileError:
        return SchemeFileError(code, self.line_number, detail)

    def read_row(self, cols: int, what: str) -> list[int]:
        if self.at_end:
            raise self._fail(ParseErrorCode.TRUNCATED_BLOCK, f"File ends inside {what}")
        line = self._lines[self.cursor]
        if line == "":
            raise self._fail(ParseErrorCode.SHAPE_MISMATCH, f"{what} has too few rows")
        tokens = _split_integers(line)
        if tokens is None:
            raise self._fail(ParseErrorCode.BAD_INTEGER, f"'{line}' is not a row of space-separated integers")
        if len(tokens) != cols:
            raise self._fail(ParseErrorCode.SHAPE_MISMATCH, f"{what} needs {cols} entries per row, got {len(tokens)}")
        values = [int(token) for token in tokens]
        if not all(self._ring.is_canonical(value) for value in values):
            raise self._fail(
                ParseErrorCode.RESIDUE_OUT_OF_RANGE,
                f"Entries of {what} must lie in [0, {self._ring.modulus})",
            )
        self.cursor += 1
        return values

    def read_separator(self, cols: int, what: str) -> None:
        if self.at_end:
            raise self._fail(ParseErrorCode.TRUNCATED_BLOCK, f"File ends without the blank line after {what}")
        line = self._lines[self.cursor]
        if line != "":
            tokens = _split_integers(line)
            if tokens is not None and len(tokens) == cols:
                raise self._fail(ParseErrorCode.SHAPE_MISMATCH, f"{what} has too many rows")
            raise self._fail(ParseErrorCode.MISSING_SEPARATOR, f"Expected a blank line after {what}")
        self.cursor += 1

    def read_factor(self, rows: int, cols: int, what: str) -> CoeffMatrix:
        values = [self.read_row(cols, what) for _ in range(rows)]
        self.read_separator(cols, what)
        return CoeffMatrix.from_rows(values)


def parse(data: bytes | str) -> Scheme:
    """Parses a scheme file.

    Args:
        data (bytes | str): The file content.

    Raises:
        SchemeFileError: The content does not follow the file grammar. The error carries a `ParseErrorCode` and the
        1-based line number where the problem was found.

    Returns:
        Scheme: The scheme, with terms in file order. Terms with a zero factor are dropped with a warning.
    """
    text = _decode(data)
    if not text:
        raise SchemeFileError(ParseErrorCode.MALFORMED_HEADER, 1, "File is empty")
    if "\r" in text:
        line = text[: text.index("\r")].count("\n") + 1
        raise SchemeFileError(ParseErrorCode.BAD_LINE_ENDING, line, "Lines must end in LF only")
    if not text.endswith("\n"):
        line = text.count("\n") + 1
        raise SchemeFileError(ParseErrorCode.MISSING_FINAL_NEWLINE, line, "File must end with a newline")

    lines = text[:-1].split("\n")
    n, m, p, rank, ring = _parse_header(lines[0])
    reader = _BlockReader(lines, ring)
    shapes = expected_shapes(n, m, p)
    names = ("A", "B", "C")

    terms: list[RankOneTerm] = []
    for index in range(rank):
        if reader.at_end:
            raise SchemeFileError(
                ParseErrorCode.RANK_MISMATCH,
                reader.line_number,
                f"Header declares {rank} terms, file has {index}",
            )
        factors = [
            reader.read_factor(rows, cols, f"factor {name} of term {index + 1}")
            for name, (rows, cols) in zip(names, shapes)
        ]
        terms.append(RankOneTerm(*factors))

    if not reader.at_end:
        tokens = _split_integers(lines[reader.cursor])
        if tokens is not None and len(tokens) == m:
            raise SchemeFileError(
                ParseErrorCode.RANK_MISMATCH,
                reader.line_number,
                f"Header declares {rank} terms, file has more",
            )
        raise SchemeFileError(
            ParseErrorCode.TRAILING_GARBAGE,
            reader.line_number,
            "Unexpected content after the last term",
        )

    zero_terms = [index + 1 for index, term in enumerate(terms) if term.has_zero_factor()]
    if zero_terms:
        _logger.warning("Dropping %d term(s) with a zero factor: %s", len(zero_terms), zero_terms)
    return Scheme.create(n, m, p, ring, terms)


def canonical_order(term: RankOneTerm) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    return (term.a.entries, term.b.entries, term.c.entries)


def canonicalize(s: Scheme) -> Scheme:
    """The same scheme with its terms in canonical order: sorted by the row-major entries of A, then B, then C."""
    return Scheme(s.n, s.m, s.p, s.ring, tuple(sorted(s.terms, key=canonical_order)))


def serialize(s: Scheme) -> bytes:
    """Writes a scheme in canonical form, so that equal schemes always give equal bytes."""
    lines = [f"{MAGIC} {VERSION} {s.n} {s.m} {s.p} {s.rank()} {s.ring}"]
    for term in canonicalize(s).terms:
        for factor in term.factors:
            lines.extend(" ".join(str(x) for x in row) for row in factor.to_rows())
            lines.append("")
    return ("\n".join(lines) + "\n").encode("utf-8")


def read_scheme(path: Path) -> Scheme:
    """Parses the scheme file at `path`.

    Raises:
        OSError: The file cannot be read.
        SchemeFileError: The file is malformed.
    """
    return parse(path.read_bytes())


def write_scheme(path: Path, s: Scheme) -> None:
    path.write_bytes(serialize(s))
