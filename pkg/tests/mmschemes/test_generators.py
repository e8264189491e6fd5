import itertools

import pytest

from mmschemes.generators import standard_scheme, strassen_scheme
from mmschemes.models import CoeffMatrix, FactorPosition
from mmschemes.ring import RingSpec
from mmschemes.verification import verify


def describe_standard_scheme():
    @pytest.mark.parametrize("fmt", [(1, 1, 1), (2, 2, 2), (2, 3, 4), (3, 3, 6)])
    def is_valid_with_naive_rank(fmt: tuple[int, int, int]):
        s = standard_scheme(*fmt)

        assert s.rank() == fmt[0] * fmt[1] * fmt[2]
        assert verify(s).valid

    @pytest.mark.parametrize("fmt", list(itertools.product(range(1, 4), repeat=3)))
    @pytest.mark.parametrize("ring", [RingSpec.integers(), RingSpec.prime_field(2), RingSpec.prime_field(3)], ids=str)
    def is_valid_for_every_small_format_and_ring(fmt: tuple[int, int, int], ring: RingSpec):
        # *** ARRANGE ***
        n, m, p = fmt

        # *** ACT ***
        s = standard_scheme(n, m, p, ring)
        report = verify(s)

        # *** ASSERT ***
        assert s.ring == ring
        assert s.rank() == n * m * p
        assert report.valid
        assert report.violated == 0
        assert report.equations == (n * m * p) ** 2

    def lists_terms_sharing_c11_first():
        s = standard_scheme(2, 2, 2)

        assert s.terms[0].a == CoeffMatrix.unit(2, 2, 0, 0)
        assert s.terms[0].b == CoeffMatrix.unit(2, 2, 0, 0)
        assert s.terms[1].a == CoeffMatrix.unit(2, 2, 0, 1)
        assert s.terms[1].b == CoeffMatrix.unit(2, 2, 1, 0)
        assert s.terms[0].factor(FactorPosition.C) == CoeffMatrix.unit(2, 2, 0, 0)
        assert s.terms[1].factor(FactorPosition.C) == CoeffMatrix.unit(2, 2, 0, 0)

    def uses_the_requested_ring():
        s = standard_scheme(2, 2, 2, RingSpec.prime_field(2))

        assert s.ring == RingSpec.prime_field(2)
        assert verify(s).valid

    def rejects_empty_formats():
        with pytest.raises(ValueError):
            standard_scheme(0, 2, 2)

    def describe_known_rank_table_formats():
        @pytest.mark.parametrize(("n", "m"), [(n, m) for m in range(2, 7) for n in range(2, m + 1)])
        def has_rank_6nm(n: int, m: int):
            assert standard_scheme(n, m, 6).rank() == 6 * n * m


def describe_strassen_scheme():
    def has_rank_seven_and_verifies():
        s = strassen_scheme()

        assert s.format == (2, 2, 2)
        assert s.rank() == 7
        assert verify(s).valid

    @pytest.mark.parametrize("p", [2, 3, 5])
    def verifies_over_prime_fields(p: int):
        assert verify(strassen_scheme(RingSpec.prime_field(p))).valid

    def first_term_is_the_sum_of_diagonals():
        s = strassen_scheme()

        assert s.terms[0].a.to_rows() == [[1, 0], [0, 1]]
        assert s.terms[0].b.to_rows() == [[1, 0], [0, 1]]
