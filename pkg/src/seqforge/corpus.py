"""A small local lookup corpus with a trigram index."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from . import closedforms
from .seqmodel import FormatError, SequenceRecord, parse_bfile, parse_stripped_line

CORE = "core"


@dataclass(frozen=True)
class LookupResult:
    anum: int
    match_position: int
    match_length: int
    rank: int


class CorpusIndex:
    """Immutable once built; safe to share between threads for lookups."""

    def __init__(self, records: Iterable[SequenceRecord] = ()):
        self.records: dict[int, SequenceRecord] = {}
        postings: dict[tuple[int, ...], list[tuple[int, int]]] = defaultdict(list)
        for rec in records:
            if rec.anum in self.records:
                raise ValueError(f"duplicate A-number {rec.label}")
            if not rec.terms:
                raise ValueError(f"{rec.label} has no terms")
            self.records[rec.anum] = rec
            t = rec.terms
            if len(t) < 3:
                postings[tuple(t)].append((rec.anum, 0))
            else:
                for i in range(len(t) - 2):
                    postings[(t[i], t[i + 1], t[i + 2])].append((rec.anum, i))
        self.trigram_index = dict(postings)

    def __len__(self) -> int:
        return len(self.records)

    def posting_count(self) -> int:
        return sum(len(v) for v in self.trigram_index.values())


def build_index(records: Iterable[SequenceRecord]) -> CorpusIndex:
    return CorpusIndex(records)


def _first_occurrence(terms: Sequence[int], query: Sequence[int]) -> int | None:
    q = len(query)
    for i in range(len(terms) - q + 1):
        if tuple(terms[i : i + q]) == tuple(query):
            return i
    return None


def lookup(index: CorpusIndex, query: Sequence[int]) -> list[LookupResult]:
    """Every record containing ``query`` contiguously, ranked.

    Ranking: earliest match position, then records tagged ``core``, then
    ascending A-number.
    """
    query = tuple(query)
    if not query:
        raise ValueError("query must have at least one term")
    hits: dict[int, int] = {}
    if len(query) < 3:
        for anum, rec in index.records.items():
            pos = _first_occurrence(rec.terms, query)
            if pos is not None:
                hits[anum] = pos
    else:
        for anum, pos in index.trigram_index.get(query[:3], ()):
            if anum in hits:
                continue  # postings are in position order
            terms = index.records[anum].terms
            if terms[pos : pos + len(query)] == query:
                hits[anum] = pos
    order = sorted(
        hits.items(),
        key=lambda kv: (kv[1], CORE not in index.records[kv[0]].keywords, kv[0]),
    )
    return [
        LookupResult(anum, pos, len(query), rank)
        for rank, (anum, pos) in enumerate(order, start=1)
    ]


def _rec(anum: int, terms: Sequence[int], name: str, offset: int, *kw: str) -> SequenceRecord:
    return SequenceRecord(anum, tuple(terms), name, offset, frozenset(kw))


def seed_corpus() -> list[SequenceRecord]:
    """Built-in records of a dozen well-known sequences."""
    return [
        _rec(40, [2, 3, 5, 7, 11, 13], "The prime numbers", 1),
        _rec(81, [1, 1, 2, 4, 9, 20, 48, 115], "Number of rooted trees with n nodes", 1),
        _rec(108, [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786],
             "Catalan numbers", 0, "core", "nonn", "easy", "nice"),
        _rec(124, [1, 2, 4, 7, 11, 16], "Pancake cutting: n(n+1)/2 + 1", 0),
        _rec(435, [1, 8, 78, 944, 13800], "Normalized total height of mappings", 1),
        _rec(1006, [1, 2, 4, 9, 21, 51, 127], "Motzkin numbers", 0),
        _rec(1011, [1, 1, 2, 5, 14, 38, 120, 353, 1148, 3527], "Folding a strip of stamps", 1),
        _rec(1034, [60, 168, 360, 504, 660, 1092], "Orders of noncyclic simple groups", 1),
        _rec(1855, [0, 1, 3, 5, 8, 11, 14], "Comparisons needed for merge sort", 0),
        _rec(3600, [1] + [closedforms.bagel(n) for n in range(1, 11)],
             "Maximal number of pieces from cutting a bagel with n cuts", 0),
        _rec(11554, [4, 14, 23, 34, 42, 50, 59], "Stops on the New York City A train", 1),
        _rec(64413, [1, 2, 4, 6, 3, 9, 12, 8, 10, 5, 15], "EKG sequence", 1),
    ]


def load_stripped(path: str | Path) -> list[SequenceRecord]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip() or line.startswith("#"):
                continue
            try:
                out.append(parse_stripped_line(line))
            except FormatError as exc:
                raise FormatError(str(exc), lineno) from None
    return out


def load_bfile_dir(path: str | Path) -> list[SequenceRecord]:
    """Records from every ``bNNNNNN.txt`` file in a directory."""
    out = []
    for f in sorted(Path(path).glob("b[0-9][0-9][0-9][0-9][0-9][0-9].txt")):
        rows = parse_bfile(f.read_bytes())
        if rows:
            out.append(SequenceRecord(int(f.stem[1:]), tuple(v for _, v in rows), offset=rows[0][0]))
    return out


def load_corpus(path: str | Path | None) -> list[SequenceRecord]:
    if path is None:
        return seed_corpus()
    p = Path(path)
    return load_bfile_dir(p) if p.is_dir() else load_stripped(p)
