"""Closed-form first-digit frequency theory over initial segments {1..m}.

Among the integers 1..m, the fraction whose base-N representation starts
with digit n oscillates as m grows: it bottoms out at m = n*N^k - 1, just
before the k-digit-wide block of integers beginning with n opens, and
peaks at m = (n+1)*N^k - 1, where that block closes.  The k-th successive
minimum and maximum are exact rationals with simple closed forms, and
their k -> infinity limits

    f_min(n) = 1 / ((N-1) n)        f_max(n) = N / ((N-1) (n+1))

bracket every admissible first-digit probability.  Normalizing the
arithmetic or geometric mean of the two limits over the digits gives two
closed-form first-digit laws that sit remarkably close to the logarithmic
(Benford) distribution; the degenerate base 2 collapses all of them to
the single certainty P(1) = 1.

Everything indexed by m or k is computed in exact integer and rational
arithmetic; floating point appears only inside DigitDistribution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .digits import Base, Digit, as_base, as_digit
from .errors import CapacityError, DomainError

KIND_MIN = "min"
KIND_MAX = "max"

LABEL_BENFORD = "benford"
LABEL_GEOM = "geom"
LABEL_ARITH = "arith"
LABEL_EMPIRICAL = "empirical"
LABEL_CUSTOM = "custom"

_MONOTONE_LABELS = frozenset({LABEL_BENFORD, LABEL_GEOM, LABEL_ARITH})

PROBABILITY_SUM_TOL = 1e-12

# Exact segment quantities (locations m, powers N^k, run endpoints) must
# stay within one signed 64-bit word; beyond it the toolkit refuses
# loudly instead of producing reports nobody can index.
INT_CAPACITY = 2**63 - 1


@dataclass(frozen=True)
class DigitDistribution:
    """First-digit probabilities P(1..N-1) for one base, with a label.

    Probabilities are floats in [0, 1] summing to 1 within 1e-12.  The
    three law labels (benford, geom, arith) additionally guarantee a
    strictly decreasing profile whenever the base has more than one digit.
    """

    base: Base
    probabilities: tuple[float, ...]
    label: str = LABEL_CUSTOM

    def __post_init__(self) -> None:
        probs = tuple(float(p) for p in self.probabilities)
        object.__setattr__(self, "probabilities", probs)
        n_digits = self.base.value - 1
        if len(probs) != n_digits:
            raise DomainError(
                f"base {self.base.value} needs {n_digits} probabilities, "
                f"got {len(probs)}"
            )
        if any(p < 0.0 or p > 1.0 for p in probs):
            raise DomainError("probabilities must lie in [0, 1]")
        total = math.fsum(probs)
        if abs(total - 1.0) > PROBABILITY_SUM_TOL:
            raise DomainError(f"probabilities sum to {total!r}, not 1")
        if self.label in _MONOTONE_LABELS and self.base.value >= 3:
            if any(a <= b for a, b in zip(probs, probs[1:])):
                raise DomainError(
                    f"{self.label} probabilities must decrease strictly in n"
                )

    @property
    def digits(self) -> tuple[int, ...]:
        return tuple(range(1, self.base.value))

    def probability(self, n: Digit | int) -> float:
        d = as_digit(n, self.base)
        return self.probabilities[d.value - 1]


@dataclass(frozen=True)
class ExtremalFrequency:
    """The k-th successive extremum of the leading-digit frequency.

    kind "min" occurs at m = n*N^k - 1 and kind "max" at
    m = (n+1)*N^k - 1; value is the exact frequency there, in lowest
    terms.
    """

    digit: Digit
    k: int
    kind: str
    value: Fraction
    location_m: int

    def __post_init__(self) -> None:
        if self.kind not in (KIND_MIN, KIND_MAX):
            raise DomainError(f"kind must be 'min' or 'max', got {self.kind!r}")
        if not isinstance(self.k, int) or self.k < 1:
            raise DomainError(f"k must be a positive integer, got {self.k!r}")
        if not 0 < self.value <= 1:
            raise DomainError(f"extremal frequency {self.value} outside (0, 1]")
        radix = self.digit.base.value
        first = self.digit.value if self.kind == KIND_MIN else self.digit.value + 1
        if self.location_m != first * radix**self.k - 1:
            raise DomainError(
                f"location {self.location_m} inconsistent with "
                f"n={self.digit.value}, k={self.k}, kind={self.kind}"
            )


@dataclass(frozen=True)
class DigitBounds:
    """One digit's sandwich: lower <= probability <= upper."""

    digit: int
    lower: Fraction
    probability: float
    upper: Fraction
    within: bool


@dataclass(frozen=True)
class BoundsReport:
    """Per-digit bound entries for one distribution."""

    base: Base
    entries: tuple[DigitBounds, ...]

    @property
    def all_within(self) -> bool:
        return all(entry.within for entry in self.entries)

    @property
    def violations(self) -> tuple[DigitBounds, ...]:
        return tuple(entry for entry in self.entries if not entry.within)


def _check_capacity(quantity: int, context: str) -> int:
    if quantity > INT_CAPACITY:
        raise CapacityError(f"{context}: {quantity} exceeds 2**63 - 1")
    return quantity


def benford(base: Base | int = 10) -> DigitDistribution:
    """Logarithmic first-digit law P(n) = log_N(1 + 1/n).

    In base 2 this is the single entry P(1) = 1: every binary numeral
    starts with 1.
    """
    b = as_base(base)
    log_radix = math.log(b.value)
    probs = tuple(math.log1p(1.0 / n) / log_radix for n in range(1, b.value))
    return DigitDistribution(b, probs, LABEL_BENFORD)


def limit_frequency(n: Digit | int, kind: str, base: Base | int = 10) -> Fraction:
    """Limit of the extremal frequencies as k grows without bound.

    min -> 1/((N-1) n), max -> N/((N-1) (n+1)), in lowest terms.
    """
    b = as_base(base)
    d = as_digit(n, b)
    radix = b.value
    if kind == KIND_MIN:
        return Fraction(1, (radix - 1) * d.value)
    if kind == KIND_MAX:
        return Fraction(radix, (radix - 1) * (d.value + 1))
    raise DomainError(f"kind must be 'min' or 'max', got {kind!r}")


def extremal_frequency(
    n: Digit | int, k: int, kind: str, base: Base | int = 10
) -> ExtremalFrequency:
    """Exact value and location of the k-th successive extremum.

    Evaluated two ways, as a ratio of digit-string sums and as the
    telescoped geometric-series closed form

        min: (N^k - 1) / ((N-1) (n N^k - 1))
        max: (N^(k+1) - 1) / ((N-1) ((n+1) N^k - 1))

    which must agree exactly.
    """
    b = as_base(base)
    d = as_digit(n, b)
    if kind not in (KIND_MIN, KIND_MAX):
        raise DomainError(f"kind must be 'min' or 'max', got {kind!r}")
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    radix = b.value
    context = f"extremal_frequency(n={d.value}, k={k}, kind={kind}, base={radix})"
    if k > 63:
        raise CapacityError(f"{context}: {radix}**{k} exceeds 2**63 - 1")
    power = _check_capacity(radix**k, context)

    # Geometric sums of the digit strings: a width-k run of ones over the
    # all-(N-1) tail that precedes the next block of leading digit n.
    repunit = (power - 1) // (radix - 1)  # 1 + N + ... + N^(k-1)
    if kind == KIND_MIN:
        location = _check_capacity(d.value * power - 1, context)
        by_digit_sums = Fraction(repunit, (d.value - 1) * power + (radix - 1) * repunit)
        closed = Fraction(power - 1, (radix - 1) * (d.value * power - 1))
    else:
        location = _check_capacity((d.value + 1) * power - 1, context)
        _check_capacity(radix * power - 1, context)
        by_digit_sums = Fraction(
            repunit + power, d.value * power + (radix - 1) * repunit
        )
        closed = Fraction(radix * power - 1, (radix - 1) * ((d.value + 1) * power - 1))
    if by_digit_sums != closed:
        raise ArithmeticError(
            f"{context}: digit-sum form {by_digit_sums} != closed form {closed}"
        )
    return ExtremalFrequency(d, k, kind, closed, location)


def arithmetic_mean_distribution(base: Base | int = 10) -> DigitDistribution:
    """Normalized arithmetic mean of the two limit frequencies.

    P(n) is proportional to N/(n+1) + 1/n; weights are kept rational and
    rounded only on output.
    """
    b = as_base(base)
    radix = b.value
    weights = [Fraction(radix, n + 1) + Fraction(1, n) for n in range(1, radix)]
    total = sum(weights)
    probs = tuple(float(w / total) for w in weights)
    return DigitDistribution(b, probs, LABEL_ARITH)


def geometric_mean_distribution(base: Base | int = 10) -> DigitDistribution:
    """Normalized geometric mean of the two limit frequencies.

    P(n) is proportional to 1/sqrt(n (n+1)).
    """
    b = as_base(base)
    weights = [1.0 / math.sqrt(n * (n + 1)) for n in range(1, b.value)]
    total = math.fsum(weights)
    probs = tuple(w / total for w in weights)
    return DigitDistribution(b, probs, LABEL_GEOM)


def leading_digit_count(n: Digit | int, m: int, base: Base | int = 10) -> int:
    """Exact count of integers in [1, m] whose leading digit is n.

    Sums the complete and partial runs [n*N^j, (n+1)*N^j - 1] clipped to
    [1, m]; equals brute-force enumeration of the segment.
    """
    b = as_base(base)
    d = as_digit(n, b)
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise DomainError(f"m must be a positive integer, got {m!r}")
    radix = b.value
    _check_capacity(m, f"leading_digit_count(n={d.value}, m={m}, base={radix})")
    count = 0
    run_start = d.value  # n * N^j
    run_width = 1  # N^j
    while run_start <= m:
        run_end = run_start + run_width - 1
        count += (run_end if run_end <= m else m) - run_start + 1
        run_start *= radix
        run_width *= radix
    return count


def exact_frequency(n: Digit | int, m: int, base: Base | int = 10) -> Fraction:
    """Frequency count(n, m) / m as an exact rational in lowest terms."""
    return Fraction(leading_digit_count(n, m, base), m)


def extremum_locations(
    n: Digit | int, k_max: int, base: Base | int = 10
) -> tuple[tuple[int, int], ...]:
    """Locations (m_min, m_max) of the first k_max successive extrema.

    m_min = n*N^k - 1 and m_max = (n+1)*N^k - 1 for k = 1..k_max.  Base 2
    has a constant frequency of 1, hence no extrema: the result is empty.
    """
    b = as_base(base)
    d = as_digit(n, b)
    if not isinstance(k_max, int) or isinstance(k_max, bool) or k_max < 1:
        raise DomainError(f"k_max must be a positive integer, got {k_max!r}")
    if b.value == 2:
        return ()
    radix = b.value
    context = f"extremum_locations(n={d.value}, k_max={k_max}, base={radix})"
    if k_max > 63:
        raise CapacityError(f"{context}: {radix}**{k_max} exceeds 2**63 - 1")
    _check_capacity((d.value + 1) * radix**k_max - 1, context)
    locations = []
    power = 1
    for _ in range(k_max):
        power *= radix
        locations.append((d.value * power - 1, (d.value + 1) * power - 1))
    return tuple(locations)


def bounds_check(dist: DigitDistribution) -> BoundsReport:
    """Sandwich test 1/((N-1) n) <= P(n) <= N/((N-1) (n+1)) per digit.

    Any first-digit probability over a restricted range must respect
    these limits even where the logarithmic law itself breaks down.
    Probabilities are floats, so containment is judged against the
    float-rounded bounds: a probability equal to a bound's nearest float
    counts as within.
    """
    radix = dist.base.value
    entries = []
    for n in range(1, radix):
        lower = Fraction(1, (radix - 1) * n)
        upper = Fraction(radix, (radix - 1) * (n + 1))
        p = dist.probabilities[n - 1]
        within = float(lower) <= p <= float(upper)
        entries.append(DigitBounds(n, lower, p, upper, within))
    return BoundsReport(dist.base, tuple(entries))
