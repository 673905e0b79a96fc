"""Radix-aware extraction of the first significant digit.

Three extractors cover the three ways numbers arrive: exact integers,
binary floating-point values, and decimal text tokens.  The integer path
is exact at any width.  The float path scales by the radix and therefore
inherits ordinary rounding fuzz right at digit boundaries.  The text path
reads the digit as printed and is the preferred route for base-10 data,
since it cannot be shifted by parse-time rounding.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import DomainError, ParseError, UsageError

MIN_BASE = 2
MAX_BASE = 36

# Digits render as 0-9A-Z; MAX_BASE is capped so every digit has a
# printable character.
DIGIT_ALPHABET = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"

# Optional sign, digits with at most one decimal point (digits required on
# at least one side), optional e/E exponent with optional sign.  No
# thousands separators, no locale forms.
NUMERAL_PATTERN = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_NUMERAL_RE = re.compile(NUMERAL_PATTERN)

# A scaled value this close under the radix is taken to be the radix
# itself, reached through float rounding, and carries to digit 1 of the
# next power.  Guards cases like 1000 * 0.001 landing a hair below 1.
_CARRY_ULPS = 4.0


@dataclass(frozen=True)
class Base:
    """Radix of the positional system, an integer in [2, 36]."""

    value: int

    def __post_init__(self) -> None:
        if not isinstance(self.value, int) or isinstance(self.value, bool):
            raise DomainError(f"base must be an integer, got {self.value!r}")
        if not MIN_BASE <= self.value <= MAX_BASE:
            raise DomainError(
                f"base must be in [{MIN_BASE}, {MAX_BASE}], got {self.value}"
            )

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value


@dataclass(frozen=True)
class Digit:
    """A leading digit for one base: 1 <= value <= base - 1, never zero."""

    value: int
    base: Base

    def __post_init__(self) -> None:
        if not isinstance(self.value, int) or isinstance(self.value, bool):
            raise DomainError(f"digit must be an integer, got {self.value!r}")
        if not 1 <= self.value <= self.base.value - 1:
            raise DomainError(
                f"digit must be in [1, {self.base.value - 1}] "
                f"for base {self.base.value}, got {self.value}"
            )

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    @property
    def char(self) -> str:
        """The digit's printable character (0-9A-Z)."""
        return DIGIT_ALPHABET[self.value]


def as_base(base: Base | int) -> Base:
    """Coerce an int to a Base; pass a Base through."""
    return base if isinstance(base, Base) else Base(base)


def as_digit(n: Digit | int, base: Base | int) -> Digit:
    """Coerce an int to a Digit of the given base; check a Digit's base."""
    b = as_base(base)
    if isinstance(n, Digit):
        if n.base != b:
            raise UsageError(
                f"digit belongs to base {n.base.value}, expected base {b.value}"
            )
        return n
    return Digit(n, b)


def leading_digit_int(m: int, base: Base | int = 10) -> Digit:
    """Most significant digit of a positive integer written in the base.

    Integer arithmetic only, so the result is exact at any width.
    """
    b = as_base(base)
    if not isinstance(m, int) or isinstance(m, bool) or m <= 0:
        raise DomainError(f"need a positive integer, got {m!r}")
    radix = b.value
    while m >= radix:
        m //= radix
    return Digit(m, b)


def leading_digit_real(x: float, base: Base | int = 10) -> Digit:
    """First significant digit of a nonzero finite real in the base.

    |x| is scaled into [1, base) by repeated multiplication or division by
    the radix, then read off with floor.  A result within a few ulps under
    the radix is treated as the radix itself (a float-rounding artifact)
    and carries over to digit 1.
    """
    b = as_base(base)
    try:
        s = abs(float(x))
    except (TypeError, ValueError) as exc:
        raise DomainError(f"not a real number: {x!r}") from exc
    if s == 0.0 or math.isinf(s) or math.isnan(s):
        raise DomainError(f"leading digit undefined for {x!r}")
    radix = float(b.value)
    while s < 1.0:
        s *= radix
    while s >= radix:
        s /= radix
    if radix - s <= _CARRY_ULPS * math.ulp(radix):
        return Digit(1, b)
    return Digit(int(s), b)


def leading_digit_text(token: str) -> Digit | None:
    """First nonzero digit of a decimal numeral, read from the text itself.

    Sign, leading zeros, and any exponent are ignored; the digit returned
    is the one that appears in print.  Returns None when the significand
    has no nonzero digit at all ("0", "0.000").  Raises ParseError for
    text that is not a decimal numeral.
    """
    if not isinstance(token, str):
        raise ParseError(f"not a decimal numeral: {token!r}")
    text = token.strip()
    if not _NUMERAL_RE.fullmatch(text):
        raise ParseError(f"not a decimal numeral: {token!r}")
    significand = text.lstrip("+-").partition("e")[0].partition("E")[0]
    for ch in significand:
        if ch == "0" or ch == ".":
            continue
        return Digit(int(ch), Base(10))
    return None
