import pytest

from kelc import counting
from kelc.complexity import klc_exhaustive, klc_fast, linear_complexity
from kelc.counting import (
    Category,
    LDecomposition,
    classify,
    decompose,
    f_mult,
    full_table,
    g_mult,
    h_mult,
    n4_count,
    n5_count,
    p_mult,
    q_mult,
    rueppel_count,
    weight8_count,
)
from kelc.errors import InvalidBranch, OutOfRange, TooLarge
from kelc.seqcore import PeriodicSequence, error_patterns

from conftest import TABLE1_N5, TABLE_N4, even_sequences


class TestRueppel:
    def test_zero(self):
        assert rueppel_count(5, 0) == 1

    def test_one(self):
        assert rueppel_count(5, 1) == 1

    def test_top(self):
        assert rueppel_count(5, 32) == 2147483648

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            rueppel_count(5, 33)

    @pytest.mark.parametrize("n", range(1, 10))
    def test_sum_covers_whole_space(self, n):
        total = 1 + sum(rueppel_count(n, L) for L in range(1, (1 << n) + 1))
        assert total == 1 << (1 << n)


class TestDecompose:
    def test_example_r3(self):
        assert decompose(5, 25) == LDecomposition(r=3, c=1)

    def test_power_gap_has_none(self):
        assert decompose(5, 16) is None

    def test_example_r5(self):
        assert decompose(5, 1) == LDecomposition(r=5, c=1)

    def test_top_two_values_have_none(self):
        assert decompose(5, 31) is None
        assert decompose(5, 30) is None

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            decompose(5, 0)
        with pytest.raises(OutOfRange):
            decompose(5, 32)

    @pytest.mark.parametrize("n", range(2, 11))
    def test_reconstruction_and_bounds(self, n):
        for L in range(1, 1 << n):
            dec = decompose(n, L)
            if dec is None:
                continue
            assert 2 <= dec.r <= n
            assert 1 <= dec.c <= (1 << (dec.r - 1)) - 1
            assert (1 << n) - (1 << dec.r) + dec.c == L


class TestClassify:
    def test_zero(self):
        assert classify(5, 0) == Category("zero")

    def test_f_branch(self):
        assert classify(5, 25) == Category("f", r=3, c=1, m=3)

    def test_p_branch(self):
        assert classify(5, 21) == Category("p", r=4, c=5, m=3, j=4)

    def test_g_branch(self):
        assert classify(5, 5) == Category("g", r=5, c=5, m=3, x=1)

    def test_h_branch(self):
        assert classify(5, 29) == Category("h", r=2, c=1, m=2)

    def test_collapsed_pair_branch(self):
        # just above the single-power point 2^(r-1) - 2^(r-2): j == m
        assert classify(5, 9) == Category("q", r=5, c=9, m=3, j=3, x=1)

    def test_unreachable(self):
        assert classify(5, 16) == Category("unreachable")
        assert classify(5, 31) == Category("unreachable")

    @pytest.mark.parametrize("n", range(2, 13))
    def test_branches_disjoint(self, n):
        # classify raises MultipleMatch if two branches ever overlap
        for L in range(1 << n):
            classify(n, L)

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            classify(5, 32)


class TestFMult:
    def test_published_values(self):
        assert f_mult(5, 3) == 36177
        assert f_mult(3, 3) == 29
        assert f_mult(5, 5) == 34953

    def test_derived_values(self):
        assert f_mult(4, 3) == 1801
        assert f_mult(4, 4) == 1597
        assert f_mult(5, 4) == 35769

    def test_bounds(self):
        with pytest.raises(InvalidBranch):
            f_mult(5, 2)
        with pytest.raises(InvalidBranch):
            f_mult(2, 3)
        with pytest.raises(InvalidBranch):
            f_mult(4, 5)


class TestGMult:
    def test_published_value(self):
        assert g_mult(5, 3) == 36317

    def test_recomposition_from_parts(self):
        assert counting._d1(5) == 8
        assert counting._d2(5, 3) == 272
        assert g_mult(5, 3) == 36457 - 4 - 136

    def test_first_part_always_divisible(self):
        for r in range(5, 13):
            for m in range(3, r - 1):
                assert counting._d1(r) % (1 << (m - 2)) == 0

    def test_bounds(self):
        with pytest.raises(InvalidBranch):
            g_mult(4, 3)
        with pytest.raises(InvalidBranch):
            g_mult(6, 5)


class TestHMult:
    def test_published_values(self):
        assert h_mult(2, 2) == 0
        assert h_mult(5, 5) == 280
        assert h_mult(5, 2) == 17920
        assert h_mult(5, 3) == 7264

    def test_derived_values(self):
        assert h_mult(3, 2) == 0
        assert h_mult(3, 3) == 0
        assert h_mult(4, 2) == 256
        assert h_mult(4, 3) == 16
        assert h_mult(4, 4) == 4
        assert h_mult(5, 4) == 1096

    def test_census_terms_at_5_3(self):
        assert counting._e1(5, 3) == 4704
        assert counting._e2(5, 3) == 384
        assert counting._e3(5, 3) == 21504
        assert counting._e4(5, 3) == 6144
        assert counting._e5(5, 3) == 5376
        assert counting._e6(5, 3) == 0
        assert counting._e7(5, 3) == 280
        assert counting._e8(5, 3) == 0

    def test_bounds(self):
        with pytest.raises(InvalidBranch):
            h_mult(5, 1)
        with pytest.raises(InvalidBranch):
            h_mult(3, 4)


class TestPMult:
    def test_published_values(self):
        assert p_mult(4, 3, 4) == 541
        assert p_mult(5, 3, 4) == 25801

    def test_derived_values(self):
        assert p_mult(5, 3, 5) == 24445
        assert p_mult(5, 4, 5) == 11437

    def test_census_terms_at_5_3_4(self):
        assert counting._f1(5, 4) == 32
        assert counting._f2(5, 3) == 16
        assert counting._f3(5, 3, 4) == 768
        assert counting._f4(5, 3, 4) == 1328
        assert counting._f9(5, 3) == 48
        assert counting._f10(5) == 16
        assert counting._f11(5, 3) == 32
        assert counting._f12(5, 3) == 896
        assert counting._f13(5, 3) == 896
        assert counting._f14(5, 3) == 0
        assert counting._f15(5, 3) == 1008
        assert counting._f16(5, 3, 4) == 960
        assert counting._f17(5, 3) == 448
        assert counting._f18(5, 3) == 448
        assert counting._f19(5, 3, 4) == 64
        assert counting._f20(5, 3) == 16128
        assert counting._f21(5, 3, 4) == 15360
        assert counting._f22(5, 3) == 10752
        assert counting._f23(5, 3, 4) == 4608
        assert counting._f24(5, 3) == 8
        assert counting._f25(5, 3) == 8
        assert counting._f26(5, 3) == 0
        assert counting._f27(5, 3) == 0

    def test_pair_census_closed_forms(self):
        for r in range(4, 10):
            for m in range(3, r + 1):
                assert counting._f2(r, m) == 1 << (r + m - 4)
                assert counting._f5(r, m) == counting._f2(r, m)
                for j in range(m + 1, r + 1):
                    assert counting._f1(r, j) == 1 << (r + j - 4)
                    assert counting._f3(r, m, j) == 3 * (1 << (r + m + j - 4))
                    assert counting._f4(r, m, j) == (
                        (1 << (r + 2 * m + j - 6))
                        + (1 << (r + m - 4))
                        + (1 << (r + j - 4))
                        + 3 * (1 << (r + m + j - 4))
                    )
                    for k in range(m + 1, j + 1):
                        assert counting._f8(r, m, k) == 1 << (r + 2 * m + k - 6)

    def test_bounds(self):
        with pytest.raises(InvalidBranch):
            p_mult(4, 3, 3)
        with pytest.raises(InvalidBranch):
            p_mult(4, 2, 4)
        with pytest.raises(InvalidBranch):
            p_mult(3, 3, 4)


class TestQMult:
    def test_collapsed_pair_value_matches_published_row(self):
        # 2^8 * q(5,3,3) must equal the published count 6837504 at L=9
        assert q_mult(5, 3, 3) == 26709

    def test_contract_no_anchor(self):
        value = q_mult(6, 3, 4)
        assert isinstance(value, int) and value > 0

    def test_census_terms_at_5_3_3(self):
        assert counting._g1(5, 3) == 16
        assert counting._g5(5, 3) == 48
        assert counting._g6(5) == 16
        assert counting._g7(5, 3) == 32
        assert counting._g8(5, 3) == 896
        assert counting._g9(5, 3) == 896
        assert counting._g10(5, 3) == 0
        assert counting._g11(5, 3) == 1008
        assert counting._g12(5, 3, 3) == 992
        assert counting._g13(5, 3) == 448
        assert counting._g14(5, 3) == 448
        assert counting._g15(5, 3, 3) == 96
        assert counting._g16(5, 3) == 16128
        assert counting._g17(5, 3, 3) == 16128
        assert counting._g18(5, 3) == 10752
        assert counting._g19(5, 3, 3) == 5376
        assert counting._g20(5, 3) == 8
        assert counting._g21(5, 3) == 8
        assert counting._g22(5, 3) == 0
        assert counting._g23(5, 3) == 0

    def test_exact_divisions_over_parameter_sweep(self):
        # every fractional coefficient must land on an integer
        for r in range(5, 13):
            for m in range(3, r - 1):
                for j in range(m, r - 1):
                    assert q_mult(r, m, j) >= 0

    def test_bounds(self):
        with pytest.raises(InvalidBranch):
            q_mult(5, 3, 4)  # j must stay below r-1
        with pytest.raises(InvalidBranch):
            q_mult(6, 2, 3)
        with pytest.raises(InvalidBranch):
            q_mult(6, 4, 3)


class TestN4Count:
    def test_zero_row(self):
        assert n4_count(5, 0) == 36457

    def test_generic_row(self):
        assert n4_count(5, 17) == 127205376
        assert n4_count(5, 17) == (1 << 16) * 1941

    def test_unreachable_rows(self):
        assert n4_count(5, 16) == 0
        assert n4_count(5, 31) == 0

    def test_generic_row_beyond_published_table(self):
        assert n4_count(6, 49) == (1 << 48) * 1941

    def test_bounds(self):
        with pytest.raises(OutOfRange):
            n4_count(5, 32)
        with pytest.raises(OutOfRange):
            n4_count(1, 0)

    @pytest.mark.parametrize("n", range(2, 10))
    def test_sum_identity(self, n):
        total = sum(n4_count(n, L) for L in range(1 << n))
        assert total == 1 << ((1 << n) - 1)

    @pytest.mark.parametrize("n", [10, 11, 12])
    def test_sum_identity_larger_periods(self, n):
        # coverage guard: a class wrongly dispatched to zero would break this
        total = sum(n4_count(n, L) for L in range(1 << n))
        assert total == 1 << ((1 << n) - 1)

    def test_nonnegative_everywhere(self):
        for n in range(2, 8):
            for L in range(1 << n):
                assert n4_count(n, L) >= 0

    def test_multiplier_depends_only_on_decomposition_shape(self):
        # same (r, c): the count divided by 2^(L-1) is the same at any n >= r
        for r, c in [(3, 1), (4, 5), (5, 9), (5, 12), (4, 2), (5, 5)]:
            mults = set()
            for n in (r, r + 1, r + 3):
                L = (1 << n) - (1 << r) + c
                count = n4_count(n, L)
                assert count % (1 << (L - 1)) == 0
                mults.add(count // (1 << (L - 1)))
            assert len(mults) == 1


class TestN5Count:
    def test_published_rows(self):
        assert n5_count(5, 25) == 486539264
        assert n5_count(5, 0) == 36457

    def test_even_population_gains_nothing_from_fifth_flip(self):
        for s in even_sequences(3):
            assert klc_exhaustive(s, 5) == klc_exhaustive(s, 4)


class TestWeight8Count:
    def test_small_values(self):
        assert weight8_count(4, 3, 4) == 16
        assert weight8_count(5, 3, 4) == 32

    def test_bounds(self):
        with pytest.raises(InvalidBranch):
            weight8_count(3, 3, 4)
        with pytest.raises(InvalidBranch):
            weight8_count(5, 3, 3)
        with pytest.raises(InvalidBranch):
            weight8_count(5, 3, 6)


class TestFullTable:
    def test_published_table_row_for_row(self):
        table = full_table(5, 4)
        assert [table.rows[L] for L in range(32)] == TABLE1_N5

    def test_published_table_sum(self):
        assert full_table(5, 4).total() == 2147483648

    def test_n4_table(self):
        table = full_table(4, 4)
        assert [table.rows[L] for L in range(16)] == TABLE_N4

    def test_keys_cover_range(self):
        table = full_table(3, 4)
        assert sorted(table.rows) == list(range(8))

    def test_k5_equals_k4(self):
        assert full_table(4, 5).rows == full_table(4, 4).rows

    def test_k_validation(self):
        with pytest.raises(OutOfRange):
            full_table(4, 3)

    def test_cap(self):
        with pytest.raises(TooLarge):
            full_table(17, 4)


class TestSieveStructure:
    def test_error_ball_sums_are_injective(self):
        # distinct (sequence, pattern) pairs from a low-complexity class give
        # distinct sums when the class complexity is at most 2^(n-3)
        n = 4
        ball = [e.bits for e in error_patterns(n, 4, "even")]
        for c in (1, 2):
            class_bits = [
                bits
                for bits in range(1 << (1 << n))
                if linear_complexity(PeriodicSequence(n, bits)) == c
            ]
            assert len(class_bits) == rueppel_count(n, c)
            sums = {s ^ e for s in class_bits for e in ball}
            assert len(sums) == len(class_bits) * len(ball)

    def test_error_ball_preserves_low_complexity(self):
        # adding weight-(0|2|4) noise to the complexity-1 class at n=4 never
        # moves its 4-error complexity (1 is not of the droppable forms)
        n = 4
        base = [
            bits
            for bits in range(1 << (1 << n))
            if linear_complexity(PeriodicSequence(n, bits)) == 1
        ]
        assert len(base) == 1
        s = base[0]
        for e in error_patterns(n, 4, "even"):
            assert klc_fast(PeriodicSequence(n, s ^ e.bits), 4) == 1
