"""Conformance scores between an observed digit sample and candidate laws.

Three statistics per candidate: Pearson correlation r over the paired
first-digit probabilities, the chi-square statistic on counts, and the
mean absolute deviation (with its max).  compare() bundles them into a
FitReport, ranks candidates by r, and screens the empirical distribution
against the universal probability sandwich from lawtheory.bounds_check.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from typing import Sequence

from .digits import Base
from .empirical import SampleSummary, empirical_distribution
from .errors import (
    DegenerateBaseError,
    DegenerateExpectationError,
    EmptySampleError,
    UndefinedCorrelationError,
    UsageError,
)
from .lawtheory import BoundsReport, DigitDistribution, bounds_check


@dataclass(frozen=True)
class CandidateScore:
    """One candidate law's statistics against the empirical sample."""

    label: str
    r: float
    chi_square: float
    chi_square_dof: int
    mad: float
    max_abs_dev: float

    def __post_init__(self) -> None:
        if not -1.0 <= self.r <= 1.0:
            raise UsageError(f"correlation {self.r} outside [-1, 1]")
        if self.chi_square < 0.0 or self.mad < 0.0:
            raise UsageError("chi_square and mad cannot be negative")
        if self.max_abs_dev < self.mad:
            raise UsageError("max_abs_dev cannot be below mad")


@dataclass(frozen=True)
class FitReport:
    """Scores for every candidate, plus the sample's bound screening.

    entries preserve candidate order; best_by_r is the label with the
    highest r, ties broken by lower mad, then by candidate order.
    bounds is computed once, on the empirical distribution itself.
    """

    base: Base
    sample: SampleSummary
    empirical: DigitDistribution
    entries: tuple[CandidateScore, ...]
    bounds: BoundsReport
    best_by_r: str


def _require_same_base(a: DigitDistribution, b: DigitDistribution) -> None:
    if a.base != b.base:
        raise UsageError(
            f"distributions use different bases: {a.base.value} vs {b.base.value}"
        )


def pearson_r(emp: DigitDistribution, theo: DigitDistribution) -> float:
    """Sample Pearson correlation over the N-1 paired probabilities.

    Base 2 offers a single point, so correlation is undefined there; a
    constant vector on either side has zero variance and is likewise
    rejected rather than scored.
    """
    _require_same_base(emp, theo)
    if emp.base.value == 2:
        raise DegenerateBaseError(
            "correlation is undefined in base 2 (one digit, one point)"
        )
    try:
        r = statistics.correlation(emp.probabilities, theo.probabilities)
    except statistics.StatisticsError as exc:
        raise UndefinedCorrelationError(
            f"zero variance in probabilities: {exc}"
        ) from None
    # correlation of x with itself can land a rounding step past 1.0
    return max(-1.0, min(1.0, r))


def chi_square(summary: SampleSummary, theo: DigitDistribution) -> tuple[float, int]:
    """Chi-square statistic of observed counts against expected counts.

    Returns (sum over n of (observed - used*P(n))^2 / (used*P(n)),
    N - 2).  Every expected count must be positive.
    """
    if summary.base != theo.base:
        raise UsageError(
            f"sample base {summary.base.value} != candidate base {theo.base.value}"
        )
    if summary.used < 1:
        raise EmptySampleError("chi_square needs at least one usable value")
    statistic = 0.0
    for observed, p in zip(summary.counts, theo.probabilities):
        expected = summary.used * p
        if expected <= 0.0:
            raise DegenerateExpectationError(
                f"expected count {expected} for probability {p} over "
                f"{summary.used} values"
            )
        statistic += (observed - expected) ** 2 / expected
    return statistic, theo.base.value - 2


def mad(emp: DigitDistribution, theo: DigitDistribution) -> float:
    """Mean absolute deviation between the two probability vectors."""
    _require_same_base(emp, theo)
    deviations = [abs(a - b) for a, b in zip(emp.probabilities, theo.probabilities)]
    return statistics.fmean(deviations)


def max_abs_dev(emp: DigitDistribution, theo: DigitDistribution) -> float:
    """Largest single-digit deviation between the two vectors."""
    _require_same_base(emp, theo)
    return max(abs(a - b) for a, b in zip(emp.probabilities, theo.probabilities))


def compare(
    summary: SampleSummary, candidates: Sequence[DigitDistribution]
) -> FitReport:
    """Score every candidate against the sample and rank by correlation.

    Raises EmptySampleError when the sample holds no usable values and
    UsageError for an empty candidate list or a base mismatch.  Errors
    from the individual statistics (degenerate base, zero variance)
    propagate unchanged.
    """
    if not candidates:
        raise UsageError("compare needs at least one candidate distribution")
    if summary.used < 1:
        raise EmptySampleError("cannot compare an empty sample")
    for cand in candidates:
        if cand.base != summary.base:
            raise UsageError(
                f"candidate {cand.label!r} uses base {cand.base.value}, "
                f"sample uses {summary.base.value}"
            )
    emp = empirical_distribution(summary)
    entries = []
    for cand in candidates:
        r = pearson_r(emp, cand)
        statistic, dof = chi_square(summary, cand)
        entries.append(
            CandidateScore(
                label=cand.label,
                r=r,
                chi_square=statistic,
                chi_square_dof=dof,
                mad=mad(emp, cand),
                max_abs_dev=max_abs_dev(emp, cand),
            )
        )
    best = max(entries, key=lambda e: (e.r, -e.mad))
    return FitReport(
        base=summary.base,
        sample=summary,
        empirical=emp,
        entries=tuple(entries),
        bounds=bounds_check(emp),
        best_by_r=best.label,
    )
