"""Tally leading digits of observed values into an empirical distribution.

A dataset enters as a stream of real values, optionally paired with the
text token each value was printed as.  Every usable value contributes one
leading digit; exact zeros and non-finite values carry no first digit and
are counted separately so the summary always accounts for the whole
stream.  Dividing the per-digit counts by the number of usable values
gives the empirical DigitDistribution that the fit module scores against
the theoretical laws.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .digits import Base, as_base, leading_digit_int, leading_digit_real, leading_digit_text
from .errors import EmptySampleError, ParseError, UsageError
from .lawtheory import LABEL_EMPIRICAL, DigitDistribution


@dataclass(frozen=True)
class SampleSummary:
    """Leading-digit counts plus the bookkeeping of skipped values.

    counts[n-1] is the number of values whose first digit is n.  Every
    value read lands in exactly one bucket:

        total_read = used + skipped_zero + skipped_nonfinite

    where used = sum(counts).
    """

    base: Base
    counts: tuple[int, ...]
    total_read: int
    used: int
    skipped_zero: int
    skipped_nonfinite: int
    source: str = ""

    def __post_init__(self) -> None:
        counts = tuple(int(c) for c in self.counts)
        object.__setattr__(self, "counts", counts)
        if len(counts) != self.base.value - 1:
            raise UsageError(
                f"base {self.base.value} needs {self.base.value - 1} counts, "
                f"got {len(counts)}"
            )
        if any(c < 0 for c in counts):
            raise UsageError("digit counts cannot be negative")
        if self.used != sum(counts):
            raise UsageError(f"used={self.used} but counts sum to {sum(counts)}")
        if self.total_read != self.used + self.skipped_zero + self.skipped_nonfinite:
            raise UsageError("total_read must equal used + skipped counts")

    def count(self, n: int) -> int:
        return self.counts[n - 1]


def tally(
    values: Iterable[float | tuple[float, str | None]],
    base: Base | int = 10,
    source: str = "",
) -> SampleSummary:
    """Count leading digits over a finite stream of values.

    Items are bare reals or (value, token) pairs.  When a token is
    present and the base is 10 the digit is read from the token text, so
    the counted digit is the printed one; otherwise it is extracted
    numerically (exactly for integers).  Sign is ignored.  Zeros and
    non-finite values are skipped and tallied as such; nothing raises.
    """
    b = as_base(base)
    counts = [0] * (b.value - 1)
    total_read = 0
    skipped_zero = 0
    skipped_nonfinite = 0
    for item in values:
        if isinstance(item, tuple):
            value, token = item
        else:
            value, token = item, None
        total_read += 1
        numeric = float(value)
        if math.isnan(numeric) or math.isinf(numeric):
            skipped_nonfinite += 1
            continue
        if numeric == 0.0:
            skipped_zero += 1
            continue
        digit = None
        if token is not None and b.value == 10:
            try:
                digit = leading_digit_text(token)
            except ParseError:
                digit = None
        if digit is None:
            if isinstance(value, int) and not isinstance(value, bool):
                digit = leading_digit_int(abs(value), b)
            else:
                digit = leading_digit_real(numeric, b)
        counts[digit.value - 1] += 1
    used = sum(counts)
    return SampleSummary(
        base=b,
        counts=tuple(counts),
        total_read=total_read,
        used=used,
        skipped_zero=skipped_zero,
        skipped_nonfinite=skipped_nonfinite,
        source=source,
    )


def merge(summaries: Sequence[SampleSummary]) -> SampleSummary:
    """Combine per-chunk summaries by adding counts (order-independent).

    All summaries must share one base.  Sources are joined with '+'.
    """
    if not summaries:
        raise UsageError("merge needs at least one summary")
    b = summaries[0].base
    if any(s.base != b for s in summaries):
        raise UsageError("cannot merge summaries with different bases")
    counts = [0] * (b.value - 1)
    for s in summaries:
        for i, c in enumerate(s.counts):
            counts[i] += c
    return SampleSummary(
        base=b,
        counts=tuple(counts),
        total_read=sum(s.total_read for s in summaries),
        used=sum(s.used for s in summaries),
        skipped_zero=sum(s.skipped_zero for s in summaries),
        skipped_nonfinite=sum(s.skipped_nonfinite for s in summaries),
        source="+".join(s.source for s in summaries if s.source),
    )


def empirical_distribution(summary: SampleSummary) -> DigitDistribution:
    """Observed first-digit probabilities counts/used.

    The underlying fractions count/used sum to 1 exactly; the stored
    floats are their nearest doubles.  Raises EmptySampleError when no
    value contributed a digit, rather than fabricating a distribution.
    """
    if summary.used < 1:
        raise EmptySampleError(
            f"no usable values in sample {summary.source!r} "
            f"(read {summary.total_read}, all skipped)"
        )
    probs = tuple(float(Fraction(c, summary.used)) for c in summary.counts)
    return DigitDistribution(summary.base, probs, LABEL_EMPIRICAL)


def empirical_fractions(summary: SampleSummary) -> tuple[Fraction, ...]:
    """Exact per-digit frequencies count/used, in lowest terms."""
    if summary.used < 1:
        raise EmptySampleError("no usable values in sample")
    return tuple(Fraction(c, summary.used) for c in summary.counts)
