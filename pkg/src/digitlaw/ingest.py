"""Line-oriented numeric dataset parsing into (value, token) records.

Three layouts cover the usual exports:

  plain        every whitespace-separated numeral on every line
  delimited    one chosen column of delimiter-separated lines
  spectrum2col the second field of two-column instrument dumps
               (abscissa ordinate, separated by whitespace or commas)

Parsing never raises on malformed content: each bad field becomes one
diagnostic carrying its line number, and the record keeps the exact text
slice the value was printed as, so downstream tallying can read the
printed digit instead of re-deriving it from the float.

The accepted numeral grammar is deliberately narrow: optional sign,
decimal digits with at most one point, optional e/E exponent.  No
thousands separators, no locale decimal commas, no inf/nan words.
spectrum2col is a minimal stand-in for real instrument formats (JCAMP-DX
and friends are out of scope) and ignores any third or later field.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .digits import NUMERAL_PATTERN
from .errors import DomainError, StructuralError

_NUMERAL_RE = re.compile(NUMERAL_PATTERN)

FORMAT_PLAIN = "plain"
FORMAT_DELIMITED = "delimited"
FORMAT_SPECTRUM2COL = "spectrum2col"

FORMATS = (FORMAT_PLAIN, FORMAT_DELIMITED, FORMAT_SPECTRUM2COL)

_DELIMITER_FORBIDDEN = set("0123456789+-.")


@dataclass(frozen=True)
class InputSpec:
    """How to slice a text stream into numeral tokens."""

    format: str = FORMAT_PLAIN
    delimiter: str = ","
    column: int = 1
    comment_prefix: str = "#"
    decimal_token_capture: bool = True

    def __post_init__(self) -> None:
        if self.format not in FORMATS:
            raise DomainError(
                f"format must be one of {', '.join(FORMATS)}, got {self.format!r}"
            )
        if len(self.delimiter) != 1 or not self.delimiter.isprintable():
            raise DomainError(
                f"delimiter must be a single printable character, "
                f"got {self.delimiter!r}"
            )
        if self.delimiter in _DELIMITER_FORBIDDEN:
            raise DomainError(
                "delimiter cannot be a digit, sign, or decimal point"
            )
        if self.format == FORMAT_DELIMITED and self.column < 1:
            raise DomainError(f"column index is 1-based, got {self.column}")
        if not self.comment_prefix:
            raise DomainError("comment prefix cannot be empty")


@dataclass(frozen=True)
class ParsedRecord:
    """One numeric field: its parsed value and the original text slice."""

    value: float
    token: str
    line: int
    column_index: int


@dataclass(frozen=True)
class Diagnostic:
    """A skipped field, with enough context to find it in the file."""

    line: int
    message: str


def _iter_lines(stream: str | Iterable[str]) -> Iterable[str]:
    if isinstance(stream, str):
        return stream.splitlines()
    return stream


def parse_dataset(
    spec: InputSpec, stream: str | Iterable[str]
) -> tuple[list[ParsedRecord], list[Diagnostic]]:
    """Extract numeric records from a text stream per the input spec.

    The stream is a string or any iterable of lines (an open text file
    works).  Lines whose first non-blank characters are the comment
    prefix are skipped outright.  Records appear in stream order; every
    malformed or missing field yields one Diagnostic instead of an
    exception.  A delimited stream whose requested column is absent from
    every data line raises StructuralError, since that is a wrong-shape
    file rather than scattered bad fields.
    """
    records: list[ParsedRecord] = []
    diagnostics: list[Diagnostic] = []
    data_lines = 0
    column_hits = 0

    for line_no, raw in enumerate(_iter_lines(stream), start=1):
        line = raw.rstrip("\r\n")
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith(spec.comment_prefix):
            continue
        data_lines += 1

        if spec.format == FORMAT_PLAIN:
            for index, token in enumerate(line.split(), start=1):
                _take(records, diagnostics, token, line_no, index)
        elif spec.format == FORMAT_DELIMITED:
            fields = line.split(spec.delimiter)
            if len(fields) < spec.column:
                diagnostics.append(
                    Diagnostic(
                        line_no,
                        f"line has {len(fields)} field(s), column "
                        f"{spec.column} missing",
                    )
                )
                continue
            column_hits += 1
            _take(
                records,
                diagnostics,
                fields[spec.column - 1].strip(),
                line_no,
                spec.column,
            )
        else:  # spectrum2col
            fields = line.replace(",", " ").split()
            if len(fields) < 2:
                diagnostics.append(
                    Diagnostic(line_no, "expected two fields, got one")
                )
                continue
            _take(records, diagnostics, fields[1], line_no, 2)

    if spec.format == FORMAT_DELIMITED and data_lines > 0 and column_hits == 0:
        raise StructuralError(
            f"column {spec.column} missing from every one of the "
            f"{data_lines} data line(s)"
        )
    return records, diagnostics


def _take(
    records: list[ParsedRecord],
    diagnostics: list[Diagnostic],
    token: str,
    line_no: int,
    column_index: int,
) -> None:
    if not _NUMERAL_RE.fullmatch(token):
        diagnostics.append(
            Diagnostic(line_no, f"not a numeral: {token!r}")
        )
        return
    records.append(ParsedRecord(float(token), token, line_no, column_index))
