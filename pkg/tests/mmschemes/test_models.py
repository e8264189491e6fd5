import pytest

from mmschemes.exceptions import StructuralError
from mmschemes.generators import standard_scheme, strassen_scheme
from mmschemes.models import CoeffMatrix, FactorPosition, KnownRankEntry, RankOneTerm, Scheme
from mmschemes.ring import RingSpec


def describe_factor_position():
    def cycles_forward_and_back():
        assert FactorPosition.A.next == FactorPosition.B
        assert FactorPosition.C.next == FactorPosition.A
        assert FactorPosition.A.previous == FactorPosition.C
        assert FactorPosition.B.previous == FactorPosition.A


def describe_coeff_matrix():
    def builds_from_rows():
        x = CoeffMatrix.from_rows([[1, 0, -1], [0, 2, 0]])

        assert x.shape == (2, 3)
        assert x[0, 2] == -1
        assert x[1, 1] == 2
        assert x.to_rows() == [[1, 0, -1], [0, 2, 0]]
        assert list(x.nonzero()) == [(0, 0, 1), (0, 2, -1), (1, 1, 2)]

    def rejects_ragged_rows():
        with pytest.raises(StructuralError):
            CoeffMatrix.from_rows([[1, 0], [1]])

    def rejects_wrong_entry_count():
        with pytest.raises(StructuralError):
            CoeffMatrix(2, 2, (1, 2, 3))

    def adds_and_subtracts_in_the_ring():
        # *** ARRANGE ***
        x = CoeffMatrix.from_rows([[1, 1]])
        y = CoeffMatrix.from_rows([[1, 0]])
        z2 = RingSpec.prime_field(2)

        # *** ACT ***
        total = x.add(y, z2)
        difference = y.subtract(x, RingSpec.integers())

        # *** ASSERT ***
        assert total.to_rows() == [[0, 1]]
        assert difference.to_rows() == [[0, -1]]

    def rejects_arithmetic_on_different_shapes():
        with pytest.raises(StructuralError):
            CoeffMatrix.zeros(1, 2).add(CoeffMatrix.zeros(2, 1), RingSpec.integers())

    def kron_puts_the_first_factor_outside():
        # *** ARRANGE ***
        x = CoeffMatrix.from_rows([[1, 2]])
        y = CoeffMatrix.from_rows([[1], [-1]])

        # *** ACT ***
        result = x.kron(y)

        # *** ASSERT ***
        assert result.to_rows() == [[1, 2], [-1, -2]]

    def embeds_blocks():
        result = CoeffMatrix.from_rows([[5]]).embed(2, 3, 1, 2)

        assert result.to_rows() == [[0, 0, 0], [0, 0, 5]]

    def rejects_blocks_that_do_not_fit():
        with pytest.raises(StructuralError):
            CoeffMatrix.zeros(2, 2).embed(2, 2, 1, 0)


def describe_rank_one_term():
    def rotates_factors():
        a = CoeffMatrix.unit(1, 2, 0, 0)
        b = CoeffMatrix.unit(2, 3, 1, 1)
        c = CoeffMatrix.unit(3, 1, 2, 0)

        assert RankOneTerm(a, b, c).rotated() == RankOneTerm(b, c, a)

    def replaces_one_factor():
        term = RankOneTerm(CoeffMatrix.unit(1, 1, 0, 0), CoeffMatrix.unit(1, 1, 0, 0), CoeffMatrix.unit(1, 1, 0, 0))

        replaced = term.with_factor(FactorPosition.B, CoeffMatrix.zeros(1, 1))

        assert replaced.b.is_zero()
        assert replaced.has_zero_factor()
        assert not term.has_zero_factor()


def describe_scheme():
    @pytest.fixture
    def unit_term() -> RankOneTerm:
        one = CoeffMatrix.from_rows([[1]])
        return RankOneTerm(one, one, one)

    def reports_format_and_ranks():
        s = standard_scheme(2, 3, 4)

        assert s.format == (2, 3, 4)
        assert s.rank() == 24
        assert s.naive_rank() == 24

    def rejects_factors_of_the_wrong_shape():
        one = CoeffMatrix.from_rows([[1]])

        with pytest.raises(StructuralError):
            Scheme(1, 1, 2, RingSpec.integers(), (RankOneTerm(one, one, one),))

    def rejects_zero_factors(unit_term: RankOneTerm):
        zero_term = unit_term.with_factor(FactorPosition.C, CoeffMatrix.zeros(1, 1))

        with pytest.raises(StructuralError):
            Scheme(1, 1, 1, RingSpec.integers(), (zero_term,))

    def rejects_non_canonical_residues():
        two = CoeffMatrix.from_rows([[2]])

        with pytest.raises(StructuralError):
            Scheme(1, 1, 1, RingSpec.prime_field(2), (RankOneTerm(two, two, two),))

    def describe_create():
        def normalizes_and_drops_terms_that_vanish():
            # *** ARRANGE ***
            one = CoeffMatrix.from_rows([[1]])
            minus_one = CoeffMatrix.from_rows([[-1]])
            two = CoeffMatrix.from_rows([[2]])

            # *** ACT ***
            s = Scheme.create(
                1,
                1,
                1,
                RingSpec.prime_field(2),
                [RankOneTerm(minus_one, one, one), RankOneTerm(two, one, one)],
            )

            # *** ASSERT ***
            assert s.rank() == 1
            assert s.terms[0].a.to_rows() == [[1]]

    def describe_statistics():
        def strassen_is_ternary():
            s = strassen_scheme()

            assert s.max_abs_coefficient() == 1
            assert s.is_ternary()
            assert s.nonzero_count() == 36

        def ternary_over_zp_allows_minus_one():
            s = strassen_scheme(RingSpec.prime_field(5))

            assert s.is_ternary()
            assert s.max_abs_coefficient() == 4

        def larger_coefficients_are_not_ternary(unit_term: RankOneTerm):
            two = CoeffMatrix.from_rows([[2]])
            s = Scheme(1, 1, 1, RingSpec.integers(), (unit_term.with_factor(FactorPosition.A, two),))

            assert not s.is_ternary()
            assert s.max_abs_coefficient() == 2


def describe_known_rank_entry():
    def knows_when_a_rank_improves_on_the_best():
        entry = KnownRankEntry(format=(2, 6, 6), naive=72, best=57, best_is_char_restricted=False, ours=56)

        assert entry.improves_on_best(56)
        assert not entry.improves_on_best(57)

    def rejects_a_wrong_naive_rank():
        with pytest.raises(ValueError):
            KnownRankEntry(format=(2, 6, 6), naive=70, best=57, best_is_char_restricted=False, ours=56)

    def rejects_ranks_above_naive():
        with pytest.raises(ValueError):
            KnownRankEntry(format=(2, 2, 6), naive=24, best=25, best_is_char_restricted=False, ours=21)
