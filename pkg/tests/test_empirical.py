"""Tallying behavior: counts, skips, merging, and the empirical law."""

import math
import random
from fractions import Fraction

import pytest

from digitlaw.digits import Base
from digitlaw.empirical import (
    SampleSummary,
    empirical_distribution,
    empirical_fractions,
    merge,
    tally,
)
from digitlaw.errors import EmptySampleError, UsageError
from digitlaw.lawtheory import exact_frequency, leading_digit_count


def test_tally_mixed_values_with_skips():
    summary = tally([1.2, 0.004, -19, 0])
    assert summary.counts == (2, 0, 0, 1, 0, 0, 0, 0, 0)
    assert summary.used == 3
    assert summary.skipped_zero == 1
    assert summary.skipped_nonfinite == 0
    assert summary.total_read == 4


def test_tally_empty_stream():
    summary = tally([])
    assert summary.counts == (0,) * 9
    assert summary.total_read == 0
    assert summary.used == 0


def test_tally_full_initial_segment_matches_closed_form_count():
    summary = tally(range(1, 2000))
    assert summary.counts[0] == 1111
    assert summary.counts[0] == leading_digit_count(1, 1999)
    assert summary.counts[1:] == (111,) * 8
    assert summary.used == 1999


def test_tally_skips_nonfinite_and_all_zero_flavors():
    summary = tally([float("nan"), float("inf"), float("-inf"), 0, 0.0, -0.0, 7])
    assert summary.skipped_nonfinite == 3
    assert summary.skipped_zero == 3
    assert summary.used == 1
    assert summary.counts[6] == 1
    assert summary.total_read == 7


def test_tally_prefers_the_printed_token_in_base_ten():
    # token and value disagree: the printed digit wins for base 10
    summary = tally([(2.5, "9.5")])
    assert summary.counts[8] == 1 and summary.used == 1
    # outside base 10 the token is ignored
    summary16 = tally([(2.5, "9.5")], 16)
    assert summary16.counts[1] == 1


def test_tally_falls_back_to_numbers_on_useless_tokens():
    # malformed token, then an all-zero token with a nonzero value
    summary = tally([(5.0, "not-a-number"), (5.0, "0.000")])
    assert summary.counts[4] == 2


def test_tally_handles_negative_integers_exactly():
    summary = tally([-(10**17 + 1), -2])
    assert summary.counts[0] == 1 and summary.counts[1] == 1


def test_tally_source_label_is_kept():
    assert tally([1], source="run-4").source == "run-4"


def test_tally_is_permutation_invariant():
    rng = random.Random(501)
    values = [rng.uniform(-1000, 1000) for _ in range(500)] + [0.0, float("inf")]
    shuffled = values[:]
    rng.shuffle(shuffled)
    a, b = tally(values), tally(shuffled)
    assert a.counts == b.counts
    assert (a.used, a.skipped_zero, a.skipped_nonfinite) == (
        b.used,
        b.skipped_zero,
        b.skipped_nonfinite,
    )


def test_tally_is_sign_invariant():
    rng = random.Random(502)
    values = [rng.uniform(0.001, 5000) for _ in range(500)]
    assert tally(values).counts == tally([-v for v in values]).counts


def test_tally_is_invariant_under_scaling_by_radix_powers():
    rng = random.Random(503)
    values = [round(rng.uniform(1.05, 9.95), 6) for _ in range(300)]
    baseline = tally(values).counts
    for e in (-6, -2, 3, 8):
        scaled = [v * 10.0**e for v in values]
        assert tally(scaled).counts == baseline


def test_merge_adds_counts_and_is_order_free():
    rng = random.Random(504)
    chunks = [
        tally([rng.randrange(1, 10**6) for _ in range(200)], source=f"c{i}")
        for i in range(4)
    ]
    merged = merge(chunks)
    total = [0] * 9
    for chunk in chunks:
        for i, c in enumerate(chunk.counts):
            total[i] += c
    assert merged.counts == tuple(total)
    assert merged.used == sum(total)
    assert merged.source == "c0+c1+c2+c3"
    reordered = merge(chunks[::-1])
    assert reordered.counts == merged.counts
    pairwise = merge([merge(chunks[:2]), merge(chunks[2:])])
    assert pairwise.counts == merged.counts and pairwise.used == merged.used


def test_merge_rejects_nothing_and_mixed_bases():
    with pytest.raises(UsageError):
        merge([])
    with pytest.raises(UsageError):
        merge([tally([1], 10), tally([1], 16)])


def test_summary_invariants_are_enforced():
    b = Base(10)
    with pytest.raises(UsageError):
        SampleSummary(b, (1, 2), 3, 3, 0, 0)  # wrong width
    with pytest.raises(UsageError):
        SampleSummary(b, (1,) * 9, 9, 8, 0, 0)  # used != sum
    with pytest.raises(UsageError):
        SampleSummary(b, (1,) * 9, 12, 9, 1, 1)  # total off by one
    with pytest.raises(UsageError):
        SampleSummary(b, (-1,) + (1,) * 8, 7, 7, 0, 0)


def test_empirical_distribution_reference_fraction():
    counts = (11, 1, 1, 1, 1, 1, 1, 1, 1)
    summary = SampleSummary(Base(10), counts, 19, 19, 0, 0)
    dist = empirical_distribution(summary)
    assert dist.probabilities[0] == float(Fraction(11, 19))
    assert dist.label == "empirical"


def test_empirical_distribution_single_digit_sample():
    summary = SampleSummary(Base(10), (0, 0, 0, 0, 5, 0, 0, 0, 0), 5, 5, 0, 0)
    dist = empirical_distribution(summary)
    assert dist.probabilities == (0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0)


def test_empirical_distribution_refuses_empty_samples():
    empty = SampleSummary(Base(10), (0,) * 9, 3, 0, 2, 1)
    with pytest.raises(EmptySampleError):
        empirical_distribution(empty)
    with pytest.raises(EmptySampleError):
        empirical_fractions(empty)


def test_empirical_fractions_sum_to_one_exactly():
    rng = random.Random(505)
    for _ in range(50):
        values = [rng.randrange(1, 10**9) for _ in range(97)]
        fractions = empirical_fractions(tally(values))
        assert sum(fractions) == 1


def test_tally_of_initial_segment_matches_exact_frequency():
    """Two independent routes to the same frequencies: brute tallying of
    {1..100000} versus the closed-form run count."""
    summary = tally(range(1, 10**5 + 1))
    dist = empirical_distribution(summary)
    for n in range(1, 10):
        expected = exact_frequency(n, 10**5)
        assert Fraction(summary.counts[n - 1], summary.used) == expected
        assert dist.probabilities[n - 1] == float(expected)


def test_tally_in_other_bases():
    summary = tally(range(1, 2001), 16)
    for n in range(1, 16):
        assert summary.counts[n - 1] == leading_digit_count(n, 2000, 16)
    binary = tally(range(1, 101), 2)
    assert binary.counts == (100,)
