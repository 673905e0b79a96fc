"""Leading-digit extraction checked against string-render oracles."""

import math
import random

import pytest

from digitlaw.digits import (
    Base,
    Digit,
    as_base,
    as_digit,
    leading_digit_int,
    leading_digit_real,
    leading_digit_text,
)
from digitlaw.errors import DomainError, ParseError, UsageError


# ------------------------------------------------------------- oracles


def first_digit_by_rendering(m: int, base: int) -> int:
    """Independent reference: render m in the base, read the first digit.

    Uses CPython's own base renderers where they exist so the oracle
    shares no code with the implementation under test.
    """
    if base == 10:
        return int(str(m)[0])
    if base == 2:
        return int(bin(m)[2])
    if base == 8:
        return int(oct(m)[2])
    if base == 16:
        return int(hex(m)[2], 16)
    digits = []
    while m:
        m, r = divmod(m, base)
        digits.append(r)
    return digits[-1]


def safe_significand(rng: random.Random, base: int) -> float:
    """A value in [1, base) that no reasonable float scaling can push
    across a power-of-base boundary (its significand is rounded to a few
    digits, so it sits far from both 1 and base)."""
    while True:
        s = round(rng.uniform(1.05, base - 0.05), 6)
        if s >= 1.05 and int(s) != s:
            return s


# ------------------------------------------------------- Base and Digit


def test_base_accepts_the_full_range():
    assert Base(2).value == 2
    assert Base(36).value == 36
    assert int(Base(16)) == 16
    assert Base(10) == Base(10)


@pytest.mark.parametrize("bad", [1, 0, -2, 37, 100, True, False, 10.0, "10"])
def test_base_rejects_out_of_range_and_non_int(bad):
    with pytest.raises(DomainError):
        Base(bad)


def test_digit_range_is_one_to_base_minus_one():
    assert Digit(1, Base(10)).value == 1
    assert Digit(9, Base(10)).value == 9
    assert Digit(35, Base(36)).value == 35
    for bad in (0, 10, -1):
        with pytest.raises(DomainError):
            Digit(bad, Base(10))


def test_digit_char_uses_the_extended_alphabet():
    assert Digit(7, Base(10)).char == "7"
    assert Digit(15, Base(16)).char == "F"
    assert Digit(35, Base(36)).char == "Z"


def test_coercers_accept_ints_and_reject_mismatched_bases():
    assert as_base(7) == Base(7)
    assert as_base(Base(7)) == Base(7)
    assert as_digit(3, Base(10)) == Digit(3, Base(10))
    with pytest.raises(UsageError):
        as_digit(Digit(3, Base(10)), Base(16))


# ------------------------------------------------------------ integers


@pytest.mark.parametrize(
    "m, base, expected",
    [(199, 10, 1), (89, 10, 8), (5, 2, 1), (1, 10, 1), (9, 10, 9), (255, 16, 15)],
)
def test_leading_digit_int_known_values(m, base, expected):
    assert leading_digit_int(m, base).value == expected


@pytest.mark.parametrize("bad", [0, -1, -199, True, False, 1.0, "9"])
def test_leading_digit_int_rejects_nonpositive_and_non_int(bad):
    with pytest.raises(DomainError):
        leading_digit_int(bad)


def test_leading_digit_int_matches_rendering_exhaustively():
    # cheap string oracles allow a dense sweep in these bases
    for m in range(1, 10**5 + 1):
        assert leading_digit_int(m, 10).value == first_digit_by_rendering(m, 10)
    for base in (2, 8, 16):
        for m in range(1, 10**4 + 1):
            assert leading_digit_int(m, base).value == first_digit_by_rendering(m, base)
    for m in range(1, 10**4 + 1):
        assert leading_digit_int(m, 3).value == first_digit_by_rendering(m, 3)


def test_leading_digit_int_matches_rendering_sampled_high():
    rng = random.Random(401)
    for _ in range(20000):
        base = rng.choice((2, 3, 8, 10, 16, 36))
        m = rng.randrange(1, 10**6 + 1)
        assert leading_digit_int(m, base).value == first_digit_by_rendering(m, base)


# --------------------------------------------------------------- reals


@pytest.mark.parametrize(
    "x, base, expected",
    [
        (0.00456, 10, 4),
        (0.125, 2, 1),
        (999.9999999, 10, 9),
        (123.456, 10, 1),
        (-0.07, 10, 7),
        (1.0, 10, 1),
        (0.3, 10, 3),
    ],
)
def test_leading_digit_real_known_values(x, base, expected):
    assert leading_digit_real(x, base).value == expected


def test_leading_digit_real_boundary_guard():
    # products that float arithmetic leaves a hair under a power of ten
    assert leading_digit_real(1000 * 0.001).value == 1
    assert leading_digit_real(0.1 + 0.1 + 0.1).value == 3


@pytest.mark.parametrize("bad", [0.0, -0.0, float("nan"), float("inf"), float("-inf")])
def test_leading_digit_real_rejects_zero_and_nonfinite(bad):
    with pytest.raises(DomainError):
        leading_digit_real(bad)


def test_leading_digit_real_sign_invariance():
    rng = random.Random(402)
    for _ in range(2000):
        x = safe_significand(rng, 10) * 10.0 ** rng.randrange(-12, 13)
        assert leading_digit_real(x).value == leading_digit_real(-x).value


def test_leading_digit_real_scale_by_radix_invariance():
    rng = random.Random(403)
    for _ in range(2000):
        x = safe_significand(rng, 10)
        expected = leading_digit_real(x).value
        for e in (-8, -3, -1, 1, 4, 9):
            assert leading_digit_real(x * 10.0**e).value == expected


def test_leading_digit_real_scale_invariance_is_exact_in_base_two():
    # ldexp scaling is lossless, so every exponent must agree
    rng = random.Random(404)
    for _ in range(2000):
        mantissa = rng.uniform(1.0, 2.0)
        expected = leading_digit_real(mantissa, 2).value
        assert expected == 1
        for e in range(-60, 61, 7):
            assert leading_digit_real(math.ldexp(mantissa, e), 2).value == expected


def test_leading_digit_real_agrees_with_int_extractor():
    rng = random.Random(405)
    for _ in range(3000):
        m = rng.randrange(1, 10**8)
        assert leading_digit_real(float(m)).value == leading_digit_int(m).value


# ---------------------------------------------------------------- text


@pytest.mark.parametrize(
    "token, expected",
    [
        ("-19", 1),
        ("0.00456e+7", 4),
        ("+.5", 5),
        ("1.", 1),
        ("1e5", 1),
        ("007", 7),
        ("-0.0032E-12", 3),
        ("999999", 9),
    ],
)
def test_leading_digit_text_reads_the_printed_digit(token, expected):
    digit = leading_digit_text(token)
    assert digit is not None and digit.value == expected


@pytest.mark.parametrize("token", ["0", "0.000", "0e9", "+0.0", "-0"])
def test_leading_digit_text_all_zero_tokens_have_no_digit(token):
    assert leading_digit_text(token) is None


@pytest.mark.parametrize(
    "token", ["", "abc", "1.2.3", "0x10", "1_000", "nan", "inf", "1e", "--1", "1 2"]
)
def test_leading_digit_text_rejects_malformed_tokens(token):
    with pytest.raises(ParseError):
        leading_digit_text(token)


def test_text_and_real_extractors_agree_on_clean_tokens():
    """Tokens with short significands parse to floats without rounding at
    the first digit, so both extraction routes must give the same answer."""
    rng = random.Random(406)
    for _ in range(3000):
        sig = round(rng.uniform(1.0000001, 9.9999), 6)
        e = rng.randrange(-15, 16)
        token = f"{sig:.6f}e{e}"
        expected = int(str(sig)[0])
        digit = leading_digit_text(token)
        assert digit is not None and digit.value == expected
        assert leading_digit_real(float(token)).value == expected
