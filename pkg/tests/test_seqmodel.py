import random

import pytest
from hypothesis import given, strategies as st

from seqforge.seqmodel import (
    FormatError,
    GapError,
    OrderClass,
    Ordering,
    SequenceRecord,
    TermStream,
    compare,
    format_stripped_line,
    ordering_key,
    parse_bfile,
    parse_stripped_line,
    sort_records,
    write_bfile,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786]


def test_ordering_key_examples():
    k = ordering_key([-1, 0, 1, 1, 2, 1, 17, 3, 2, 1])
    assert k.klass is OrderClass.NORMAL and k.key == (2, 1, 17, 3, 2, 1)
    assert ordering_key([0, 0, 0]) == ordering_key([0, 0, 0])
    assert ordering_key([0, 0, 0]).klass is OrderClass.SMALL_TERMS
    assert ordering_key([0, 0, 0]).key == (0, 0, 0)
    assert ordering_key([1, 1, 1]).key == (1, 1, 1)
    assert ordering_key([1, -1, 0]).key == (1, 1, 0)
    with pytest.raises(ValueError):
        ordering_key([])


def test_compare_examples():
    assert compare([1, 2, 4], [1, 2, 5]) is Ordering.BEFORE
    assert compare([1, 2], [1, 2, 4]) is Ordering.BEFORE
    assert compare([1, 2, 4, 3], [1, 2, 4, 3]) is Ordering.EQUAL
    assert compare([1, 2, 5], [1, 2, 4]) is Ordering.AFTER


def test_text_example_order():
    # 1,2,3 < 1,2,4 < 1,2,4,3 < 1,2,5 < 1,3
    expected = [[1, 2, 3], [1, 2, 4], [1, 2, 4, 3], [1, 2, 5], [1, 3]]
    shuffled = expected[:]
    random.Random(5).shuffle(shuffled)
    recs = [SequenceRecord(i + 1, tuple(t)) for i, t in enumerate(shuffled)]
    assert [list(r.terms) for r in sort_records(recs)] == expected


def test_zero_sequence_is_first():
    recs = [
        SequenceRecord(108, tuple(CATALAN)),
        SequenceRecord(12, (1, 1, 1, 1)),
        SequenceRecord(4, (0, 0, 0, 0)),
        SequenceRecord(7, (1, 0, 0, 0)),
    ]
    assert sort_records(recs)[0].anum == 4


def test_equal_keys_tie_break_by_anum():
    recs = [SequenceRecord(9, (0, 2, 3)), SequenceRecord(3, (1, 2, 3)), SequenceRecord(5, (-2, 3))]
    assert [r.anum for r in sort_records(recs)] == [3, 5, 9]


small_lists = st.lists(st.integers(-9, 9), min_size=1, max_size=12)


@given(small_lists, small_lists)
def test_compare_antisymmetric(a, b):
    ab, ba = compare(a, b), compare(b, a)
    if ab is Ordering.BEFORE:
        assert ba is Ordering.AFTER
    elif ab is Ordering.AFTER:
        assert ba is Ordering.BEFORE
    else:
        assert ba is Ordering.EQUAL


@given(small_lists, small_lists, small_lists)
def test_compare_transitive(a, b, c):
    order = {Ordering.BEFORE: -1, Ordering.EQUAL: 0, Ordering.AFTER: 1}
    if order[compare(a, b)] <= 0 and order[compare(b, c)] <= 0:
        assert order[compare(a, c)] <= 0


@given(st.lists(st.integers(-1, 1), min_size=1, max_size=8), small_lists)
def test_small_terms_precede_normal(small, other):
    if any(abs(t) > 1 for t in other):
        assert compare(small, other) is Ordering.BEFORE


def test_parse_bfile_examples():
    assert parse_bfile(b"0 1\n1 1\n2 2\n3 5\n") == [(0, 1), (1, 1), (2, 2), (3, 5)]
    assert parse_bfile("# comment\n5 -3\n6 0\n") == [(5, -3), (6, 0)]
    assert parse_bfile("\n\n0 7\n\n1 8\n") == [(0, 7), (1, 8)]


def test_parse_bfile_errors():
    with pytest.raises(GapError) as exc:
        parse_bfile("0 1\n2 2\n")
    assert exc.value.line == 2
    with pytest.raises(FormatError) as exc:
        parse_bfile("0 1\n1 x\n")
    assert exc.value.line == 2
    with pytest.raises(FormatError):
        parse_bfile("0 1 2\n")


def test_write_bfile():
    assert write_bfile([(1, 0)]) == b"1 0\n"
    text = write_bfile(enumerate(CATALAN))
    assert text.count(b"\n") == 12
    assert text.endswith(b"11 58786\n")
    with pytest.raises(GapError):
        write_bfile([(0, 1), (2, 3)])


@given(st.integers(-5, 100), st.lists(st.integers(-(10**40), 10**40), max_size=30))
def test_bfile_round_trip(offset, values):
    rows = list(enumerate(values, start=offset))
    text = write_bfile(rows)
    assert parse_bfile(text) == rows
    assert write_bfile(parse_bfile(text)) == text


def test_stripped_examples():
    r = parse_stripped_line("A000108 ,1,1,2,5,14,")
    assert r.anum == 108 and r.terms == (1, 1, 2, 5, 14) and r.name == ""
    assert parse_stripped_line("A000004 ,0,0,0,\n").terms == (0, 0, 0)
    for bad in ("B000001 ,1,", "A00001 ,1,", "A000001 1,2,", "A000001 ,", "A000000 ,1,"):
        with pytest.raises(FormatError):
            parse_stripped_line(bad)


@given(st.integers(1, 999999), st.lists(st.integers(-(10**30), 10**30), min_size=1, max_size=20))
def test_stripped_round_trip(anum, terms):
    line = format_stripped_line(SequenceRecord(anum, tuple(terms)))
    rec = parse_stripped_line(line)
    assert rec.anum == anum and list(rec.terms) == terms
    assert format_stripped_line(rec) == line


def test_term_stream_indices():
    stream = TermStream(iter([5, 6, 7]), offset=3)
    assert list(stream) == [(3, 5), (4, 6), (5, 7)]
