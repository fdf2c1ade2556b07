import math
import random

import numpy as np
import pytest

from benfordkit.errors import DomainError, EmptyCensus
from benfordkit.gof import (
    CHI2_CRITICAL_1PCT,
    CHI2_CRITICAL_5PCT,
    DigitCensus,
    benford_frequencies,
    build_census,
    chi_square,
    full_report,
    max_deviation,
    tvd_benford,
)
from benfordkit.significand import parse_token

TABLE4_COUNTS = (63, 37, 18, 15, 15, 13, 7, 7, 8)


def census(counts, position=1, base=10, exclusions=0):
    return DigitCensus(position, base, tuple(counts), exclusions)


class TestCensusType:
    def test_support_and_size(self):
        c = census(TABLE4_COUNTS)
        assert c.support == tuple(range(1, 10))
        assert c.sample_size == 183
        assert c.count_of(1) == 63

    def test_position_two_support_includes_zero(self):
        c = DigitCensus.empty(2, 10)
        assert c.support == tuple(range(10))

    def test_count_length_validation(self):
        with pytest.raises(ValueError):
            DigitCensus(1, 10, (1, 2, 3))
        with pytest.raises(ValueError):
            DigitCensus(1, 10, (-1,) + (0,) * 8)

    def test_merge_commutative_associative(self):
        rng = random.Random(5)
        a = census([rng.randrange(50) for _ in range(9)], exclusions=2)
        b = census([rng.randrange(50) for _ in range(9)], exclusions=1)
        c = census([rng.randrange(50) for _ in range(9)])
        assert a.merge(b) == b.merge(a)
        assert (a + b) + c == a + (b + c)
        assert (a + b).exclusions == 3

    def test_merge_mismatch(self):
        with pytest.raises(DomainError):
            census(TABLE4_COUNTS).merge(DigitCensus.empty(2, 10))

    def test_from_digits(self):
        c = DigitCensus.from_digits([1, 1, 2, 9], 1, 10)
        assert c.counts == (2, 1, 0, 0, 0, 0, 0, 0, 1)
        with pytest.raises(DomainError):
            DigitCensus.from_digits([0], 1, 10)
        # Position 2 accepts zeros.
        c2 = DigitCensus.from_digits([0, 5], 2, 10)
        assert c2.counts[0] == 1


class TestBuildCensus:
    def test_single_digits_one_through_nine(self):
        c = build_census(range(1, 10))
        assert c.counts == (1,) * 9

    def test_mixed_value_kinds(self):
        c = build_census([parse_token("0.150"), 129])
        assert c.count_of(1) == 2

    def test_empty_stream(self):
        c = build_census([])
        assert c.sample_size == 0

    def test_zeros_are_excluded_and_counted(self):
        c = build_census(["0", 0, 0.0, "0.00", 7])
        assert c.sample_size == 1
        assert c.exclusions == 4

    def test_deeper_position(self):
        c = build_census([129, "0.150"], position=2)
        assert c.count_of(2), c.count_of(5) == (1, 1)

    def test_string_tokens_with_separators(self):
        c = build_census(["2,300"], separators=True)
        assert c.count_of(2) == 1


class TestStatistics:
    def test_reference_census(self):
        c = census(TABLE4_COUNTS)
        assert chi_square(c) == pytest.approx(5.206, abs=0.01)
        assert tvd_benford(c) == pytest.approx(0.0762, abs=0.0005)
        value, digit = max_deviation(c)
        assert value == pytest.approx(0.0432, abs=0.0005)
        assert digit == 1

    def test_near_exact_law_drives_all_statistics_to_zero(self):
        # Integer counts cannot hit the law exactly; at huge sample size the
        # nearest-integer census drives every statistic below 1e-8.
        size = 10**9
        counts = [round(p * size) for p in benford_frequencies()]
        c = census(counts)
        assert 0.0 <= chi_square(c) < 1e-7
        assert 0.0 <= tvd_benford(c) < 1e-8
        value, _ = max_deviation(c)
        assert 0.0 <= value < 1e-8

    def test_empty_census(self):
        for stat in (chi_square, tvd_benford, max_deviation, full_report):
            with pytest.raises(EmptyCensus):
                stat(DigitCensus.empty())

    def test_only_first_digit_base_ten_testable(self):
        with pytest.raises(DomainError):
            chi_square(DigitCensus(2, 10, (1,) * 10))
        with pytest.raises(DomainError):
            chi_square(DigitCensus(1, 16, (1,) * 15))

    def test_chi_square_matches_pearson_form(self):
        # The frequency form times S equals the classic count form.
        c = census(TABLE4_COUNTS)
        S = c.sample_size
        expected_counts = benford_frequencies() * S
        pearson = sum(
            (o - e) ** 2 / e for o, e in zip(c.counts, expected_counts)
        )
        assert chi_square(c) == pytest.approx(pearson, rel=1e-12)


class TestFullReport:
    def test_fields_consistent(self):
        r = full_report(census(TABLE4_COUNTS))
        assert r.sample_size == 183
        assert r.verdict_5pct == "accept" and r.verdict_1pct == "accept"
        assert math.fsum(r.observed_freq) == pytest.approx(1.0, abs=1e-12)
        assert r.d_max == max(
            abs(o - e) for o, e in zip(r.observed_freq, r.expected_freq)
        )
        assert r.accepted(5) and r.accepted(1)

    def test_verdicts_track_thresholds(self):
        rng = np.random.default_rng(42)
        for _ in range(300):
            counts = rng.multinomial(rng.integers(9, 500), rng.dirichlet(np.ones(9)))
            if counts.sum() == 0:
                continue
            r = full_report(census(counts.tolist()))
            assert (r.verdict_5pct == "reject") == (r.chi_square > CHI2_CRITICAL_5PCT)
            assert (r.verdict_1pct == "reject") == (r.chi_square > CHI2_CRITICAL_1PCT)
            # Rejection at 1% implies rejection at 5%.
            if r.verdict_1pct == "reject":
                assert r.verdict_5pct == "reject"

    def test_max_deviation_tie_break_prefers_smaller_digit(self):
        rng = np.random.default_rng(9)
        for _ in range(200):
            counts = rng.multinomial(200, rng.dirichlet(np.ones(9)))
            c = census(counts.tolist())
            value, digit = max_deviation(c)
            deviations = np.abs(c.frequencies() - benford_frequencies())
            ties = [d for d, dev in zip(c.support, deviations) if dev == value]
            assert digit == min(ties)


class TestPoolingAndScale:
    def test_merge_equals_pooled_stream(self):
        rng = random.Random(77)
        first = [rng.randrange(1, 10**9) for _ in range(400)]
        second = [rng.randrange(1, 10**9) for _ in range(300)]
        merged = build_census(first).merge(build_census(second))
        pooled = build_census(first + second)
        assert merged == pooled
        assert chi_square(merged) == chi_square(pooled)
        assert tvd_benford(merged) == tvd_benford(pooled)
        assert max_deviation(merged) == max_deviation(pooled)

    def test_statistics_invariant_under_power_of_ten_scaling(self):
        rng = random.Random(13)
        values = [parse_token(f"{rng.randrange(1, 10**6)}.{rng.randrange(10**4)}")
                  for _ in range(500)]
        base_census = build_census(values)
        for shift in (-6, 3, 11):
            scaled = build_census([v.scaled(shift) for v in values])
            assert scaled.counts == base_census.counts
            assert chi_square(scaled) == chi_square(base_census)
            assert tvd_benford(scaled) == tvd_benford(base_census)
            assert max_deviation(scaled) == max_deviation(base_census)
