"""Invariant suites as plain property tests (shared with the acceptance gate)."""

import property_checks as checks


def test_first_digit_law_normalizes_in_every_base():
    checks.check_normalization()


def test_joint_law_marginal_consistency():
    checks.check_marginal_consistency()


def test_census_merge_equals_pooled_census():
    checks.check_census_merge_pooled()


def test_scale_shift_preserves_digits():
    checks.check_scale_shift_invariance()


def test_deviation_statistic_inequalities():
    checks.check_deviation_inequalities()
