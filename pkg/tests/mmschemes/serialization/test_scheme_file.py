import logging
import time
from pathlib import Path

import pytest
from testutils import support_files_dir

from mmschemes import ParseErrorCode, RingSpec, SchemeFileError, load_bundled, rotate, standard_scheme, strassen_scheme
from mmschemes.bundled import bundled_path
from mmschemes.serialization.scheme_file import (
    canonical_order,
    canonicalize,
    parse,
    read_scheme,
    serialize,
    write_scheme,
)

SUPPORT_FILES_DIR = support_files_dir(__file__)

VALID_1X1X1 = "bms v1 1 1 1 1 Z\n1\n\n1\n\n1\n\n"


def describe_parse():
    def describe_with_malformed_files():
        @pytest.mark.parametrize(
            ("filename", "code", "line"),
            [
                ("bad_magic.bms", ParseErrorCode.MALFORMED_HEADER, 1),
                ("version_2.bms", ParseErrorCode.UNSUPPORTED_VERSION, 1),
                ("composite_modulus.bms", ParseErrorCode.BAD_RING, 1),
                ("not_an_integer.bms", ParseErrorCode.BAD_INTEGER, 4),
                ("short_row.bms", ParseErrorCode.SHAPE_MISMATCH, 2),
                ("residue_too_large.bms", ParseErrorCode.RESIDUE_OUT_OF_RANGE, 4),
                ("truncated.bms", ParseErrorCode.TRUNCATED_BLOCK, 5),
                ("too_few_terms.bms", ParseErrorCode.RANK_MISMATCH, 8),
                ("trailing_text.bms", ParseErrorCode.TRAILING_GARBAGE, 8),
                ("crlf.bms", ParseErrorCode.BAD_LINE_ENDING, 1),
                ("latin1.bms", ParseErrorCode.BAD_ENCODING, 2),
            ],
        )
        def reports_the_code_and_line(filename: str, code: ParseErrorCode, line: int):
            # *** ARRANGE ***
            path = SUPPORT_FILES_DIR.joinpath(filename)

            # *** ACT ***
            with pytest.raises(SchemeFileError) as ex_info:
                read_scheme(path)

            # *** ASSERT ***
            assert ex_info.value.code == code
            assert ex_info.value.line == line
            assert f"[{code.value}]" in ex_info.value.message

    def describe_with_malformed_text():
        @pytest.mark.parametrize(
            ("text", "code", "line"),
            [
                ("", ParseErrorCode.MALFORMED_HEADER, 1),
                ("bms v1 1 1 1 1 Z", ParseErrorCode.MISSING_FINAL_NEWLINE, 1),
                ("bms\n", ParseErrorCode.MALFORMED_HEADER, 1),
                ("bms v1 1 1 1\n", ParseErrorCode.MALFORMED_HEADER, 1),
                ("bms v1 0 1 1 1 Z\n", ParseErrorCode.MALFORMED_HEADER, 1),
                ("bms vx 1 1 1 1 Z\n", ParseErrorCode.MALFORMED_HEADER, 1),
                ("bms v1 1 1 1 1 Q\n", ParseErrorCode.BAD_RING, 1),
                ("bms v1 1 1 1 1 Zp\n", ParseErrorCode.BAD_RING, 1),
                ("bms v1 1 1 1 1 Zp 4\n", ParseErrorCode.BAD_RING, 1),
                ("bms v1 1 1 1 1 Zp 2147483659\n", ParseErrorCode.BAD_RING, 1),
                ("bms v1 1 1 1 1 Zp 1000000000000000000000000000057\n", ParseErrorCode.BAD_RING, 1),
                ("bms v1 1 1 1 1 Z\n1  \n\n1\n\n1\n\n", ParseErrorCode.BAD_INTEGER, 2),
                ("bms v1 1 1 1 1 Z\n1.0\n\n1\n\n1\n\n", ParseErrorCode.BAD_INTEGER, 2),
                ("bms v1 2 1 1 1 Z\n1\n\n", ParseErrorCode.SHAPE_MISMATCH, 3),
                ("bms v1 1 1 1 1 Z\n1\n1\n\n1\n\n1\n\n", ParseErrorCode.SHAPE_MISMATCH, 3),
                ("bms v1 1 1 1 1 Z\n1\nfoo\n1\n\n1\n\n", ParseErrorCode.MISSING_SEPARATOR, 3),
                ("bms v1 1 1 1 1 Zp 2\n1\n\n-1\n\n1\n\n", ParseErrorCode.RESIDUE_OUT_OF_RANGE, 4),
                ("bms v1 1 1 1 0 Z\n1\n\n1\n\n1\n\n", ParseErrorCode.RANK_MISMATCH, 2),
                ("bms v1 1 1 1 1 Z\n1\n\n1\n\n1\n", ParseErrorCode.TRUNCATED_BLOCK, 7),
            ],
        )
        def reports_the_code_and_line(text: str, code: ParseErrorCode, line: int):
            with pytest.raises(SchemeFileError) as ex_info:
                parse(text.encode("utf-8"))

            assert ex_info.value.code == code
            assert ex_info.value.line == line

        def rejects_huge_moduli_without_testing_primality():
            # *** ARRANGE ***
            text = "bms v1 1 1 1 1 Zp " + "9" * 4000 + "\n"

            # *** ACT ***
            started = time.perf_counter()
            with pytest.raises(SchemeFileError) as ex_info:
                parse(text)
            elapsed = time.perf_counter() - started

            # *** ASSERT ***
            assert ex_info.value.code == ParseErrorCode.BAD_RING
            assert elapsed < 1.0

    def describe_with_valid_files():
        def reads_factors_in_file_order():
            # *** ACT ***
            s = read_scheme(SUPPORT_FILES_DIR.joinpath("valid_2x2x1.bms"))

            # *** ASSERT ***
            assert s.format == (2, 2, 1)
            assert s.ring == RingSpec.integers()
            assert s.rank() == 1
            assert s.terms[0].a.to_rows() == [[1, -1], [0, 2]]
            assert s.terms[0].b.to_rows() == [[1], [1]]
            assert s.terms[0].c.to_rows() == [[1, 0]]

        def accepts_text_and_bytes():
            assert parse(VALID_1X1X1) == parse(VALID_1X1X1.encode("utf-8")) == standard_scheme(1, 1, 1)

        def accepts_explicit_signs():
            s = parse("bms v1 1 1 1 1 Z\n+1\n\n-2\n\n1\n\n")

            assert s.terms[0].b.to_rows() == [[-2]]

        def reads_prime_field_schemes():
            s = parse("bms v1 1 1 1 1 Zp 5\n1\n\n4\n\n1\n\n")

            assert s.ring == RingSpec.prime_field(5)
            assert s.terms[0].b.to_rows() == [[4]]

        def drops_terms_with_a_zero_factor(caplog: pytest.LogCaptureFixture):
            # *** ARRANGE ***
            text = "bms v1 1 1 1 2 Z\n0\n\n1\n\n1\n\n1\n\n1\n\n1\n\n"

            # *** ACT ***
            with caplog.at_level(logging.WARNING):
                s = parse(text)

            # *** ASSERT ***
            assert s.rank() == 1
            assert "zero factor" in caplog.text

        @pytest.mark.parametrize("name", ["2x6x6_r56", "3x4x6_r56", "strassen"])
        def reads_bundled_schemes(name: str):
            s = read_scheme(bundled_path(name))

            assert s.rank() == (7 if name == "strassen" else 56)


def describe_serialize():
    def writes_the_1x1x1_scheme():
        assert serialize(standard_scheme(1, 1, 1)) == VALID_1X1X1.encode("utf-8")

    def writes_the_ring_in_the_header():
        data = serialize(strassen_scheme(RingSpec.prime_field(3)))

        assert data.startswith(b"bms v1 2 2 2 7 Zp 3\n")
        assert data.endswith(b"\n\n")

    @pytest.mark.parametrize("name", ["2x6x6_r56", "3x4x6_r56", "strassen"])
    def is_a_fixpoint_of_parse(name: str):
        data = serialize(load_bundled(name))

        assert serialize(parse(data)) == data

    def ignores_term_order():
        s = strassen_scheme()
        shuffled = s.replace_terms(reversed(s.terms))

        assert serialize(shuffled) == serialize(s)

    def rotating_three_times_gives_the_same_bytes():
        s = load_bundled("3x4x6_r56")

        assert serialize(rotate(rotate(rotate(s)))) == serialize(s)

    @pytest.mark.parametrize("name", ["strassen", "2x6x6_r56"])
    def rotation_only_cycles_the_factors_of_each_term(name: str):
        # *** ARRANGE ***
        s = load_bundled(name)

        # *** ACT ***
        rotated = canonicalize(rotate(s))

        # *** ASSERT ***
        expected = sorted((t.rotated() for t in canonicalize(s).terms), key=canonical_order)
        assert list(rotated.terms) == expected
        assert serialize(rotated).split(b"\n", 1)[0] == f"bms v1 {s.m} {s.p} {s.n} {s.rank()} {s.ring}".encode("utf-8")


def describe_canonicalize():
    def sorts_terms_by_factor_entries():
        s = canonicalize(strassen_scheme())

        keys = [(t.a.entries, t.b.entries, t.c.entries) for t in s.terms]
        assert keys == sorted(keys)
        assert s.rank() == 7


def describe_write_scheme():
    def writes_a_file_that_reads_back(tmp_path: Path):
        # *** ARRANGE ***
        path = tmp_path.joinpath("strassen.bms")

        # *** ACT ***
        write_scheme(path, strassen_scheme())

        # *** ASSERT ***
        assert read_scheme(path) == canonicalize(strassen_scheme())

    def missing_files_raise_os_errors(tmp_path: Path):
        with pytest.raises(FileNotFoundError):
            read_scheme(tmp_path.joinpath("missing.bms"))
