"""Sequence records, OEIS-style lexicographic placement, and text formats.

Two persistence formats are supported:

* b-files: one ``index value`` pair per line, ``#`` comment lines allowed.
* stripped lines: ``A000108 ,1,1,2,5,14,``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class FormatError(ValueError):
    """Malformed b-file or stripped-format input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class GapError(FormatError):
    """Indices in a b-file are not contiguous."""


def format_anum(anum: int) -> str:
    if not 1 <= anum <= 999999:
        raise ValueError(f"A-number out of range: {anum}")
    return f"A{anum:06d}"


def parse_anum(text: str) -> int:
    m = re.fullmatch(r"A(\d{6})", text)
    if not m or int(m.group(1)) == 0:
        raise FormatError(f"bad A-number {text!r}")
    return int(m.group(1))


@dataclass(frozen=True)
class SequenceRecord:
    anum: int
    terms: tuple[int, ...]
    name: str = ""
    offset: int = 0
    keywords: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        format_anum(self.anum)

    @property
    def label(self) -> str:
        return format_anum(self.anum)


class OrderClass(enum.IntEnum):
    SMALL_TERMS = 0
    NORMAL = 1


class Ordering(enum.Enum):
    BEFORE = "Before"
    EQUAL = "Equal"
    AFTER = "After"


@dataclass(frozen=True, order=True)
class OrderingKey:
    klass: OrderClass
    key: tuple[int, ...]


def ordering_key(terms: Sequence[int]) -> OrderingKey:
    """Position of a sequence in the OEIS lexicographic arrangement.

    Signs are dropped and every term before the first one exceeding 1 is
    discarded. Sequences made only of 0s and +-1s sort first, by absolute value.
    """
    if len(terms) == 0:
        raise ValueError("ordering_key needs at least one term")
    absolute = tuple(abs(t) for t in terms)
    for i, t in enumerate(absolute):
        if t > 1:
            return OrderingKey(OrderClass.NORMAL, absolute[i:])
    return OrderingKey(OrderClass.SMALL_TERMS, absolute)


def compare(a: Sequence[int], b: Sequence[int]) -> Ordering:
    # tuple comparison already puts a proper prefix ("blank") first
    ka, kb = ordering_key(a), ordering_key(b)
    if ka < kb:
        return Ordering.BEFORE
    if ka > kb:
        return Ordering.AFTER
    return Ordering.EQUAL


def sort_records(records: Iterable[SequenceRecord]) -> list[SequenceRecord]:
    """Records in lexicographic arrangement; equal keys fall back to A-number."""
    return sorted(records, key=lambda r: (ordering_key(r.terms), r.anum))


def _decode(text: bytes | str) -> str:
    return text.decode("utf-8") if isinstance(text, (bytes, bytearray)) else text


def parse_bfile(text: bytes | str) -> list[tuple[int, int]]:
    rows: list[tuple[int, int]] = []
    for lineno, raw in enumerate(_decode(text).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'index value', got {raw!r}", lineno)
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer field in {raw!r}", lineno) from None
        if rows and index != rows[-1][0] + 1:
            raise GapError(f"index {index} follows {rows[-1][0]}", lineno)
        rows.append((index, value))
    return rows


def write_bfile(rows: Iterable[tuple[int, int]]) -> bytes:
    out: list[str] = []
    prev: int | None = None
    for index, value in rows:
        if prev is not None and index != prev + 1:
            raise GapError(f"index {index} follows {prev}")
        out.append(f"{index} {value}\n")
        prev = index
    return "".join(out).encode("ascii")


def rows_from_terms(terms: Iterable[int], offset: int = 0) -> Iterator[tuple[int, int]]:
    return enumerate(terms, start=offset)


_STRIPPED = re.compile(r"(A\d{6}) ,((?:-?\d+,)+)")


def parse_stripped_line(line: str) -> SequenceRecord:
    m = _STRIPPED.fullmatch(line.rstrip("\r\n"))
    if not m:
        raise FormatError(f"not a stripped-format line: {line!r}")
    anum = parse_anum(m.group(1))
    terms = tuple(int(t) for t in m.group(2).rstrip(",").split(","))
    return SequenceRecord(anum=anum, terms=terms)


def format_stripped_line(record: SequenceRecord) -> str:
    return f"{record.label} ," + "".join(f"{t}," for t in record.terms)


class TermStream:
    """Wraps an iterator of values as ``(index, value)`` pairs starting at offset."""

    def __init__(self, values: Iterable[int], offset: int = 0):
        self._values = iter(values)
        self.offset = offset
        self._next_index = offset

    def __iter__(self) -> TermStream:
        return self

    def __next__(self) -> tuple[int, int]:
        value = next(self._values)
        index = self._next_index
        self._next_index += 1
        return index, value
