"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line that the terminal summary prints after
the run. Wall-clock limits are measured around the work they cover.
"""

import random
import subprocess
import sys
import time
from contextlib import contextmanager
from itertools import product
from math import gcd

import pytest

from conftest import ACCEPTANCE
from oracles import curling_brute, divisor_sum_sieve, recaman_naive, totient_sieve
from seqforge import arith
from seqforge.closedforms import bagel, binomial_identity, catalan, catalan_by_recurrence, pancake, sigma_gap
from seqforge.corpus import build_index, lookup, seed_corpus
from seqforge.curling import curling_number, gijswijt
from seqforge.les import LesFamily, enots_wolley_membership_scan, les_generate
from seqforge.recaman import RecamanState, first_occurrence, recaman_terms
from seqforge.seqmodel import (
    GapError,
    Ordering,
    SequenceRecord,
    compare,
    format_stripped_line,
    ordering_key,
    parse_bfile,
    parse_stripped_line,
    write_bfile,
)
from seqforge.stones import TWO_STONE_BOARD, SearchConfig, chimney_construction, linear_construction, solve, verify
from seqforge.trajectories import MapKind, Outcome, classify_range, trajectory

pytestmark = pytest.mark.slow


@contextmanager
def criterion(number, limit=None):
    start = time.perf_counter()
    notes = []
    try:
        yield notes
    except BaseException as exc:
        ACCEPTANCE[number] = (False, f"{type(exc).__name__}: {exc}"[:200])
        raise
    elapsed = time.perf_counter() - start
    detail = f"{elapsed:.2f}s" + (f" (limit {limit}s)" if limit else "")
    if notes:
        detail += "; " + "; ".join(notes)
    ok = limit is None or elapsed < limit
    ACCEPTANCE[number] = (ok, detail)
    assert ok, f"criterion {number} took {elapsed:.1f}s, limit {limit}s"


def test_c01_recaman_exactness():
    with criterion(1, limit=1):
        assert recaman_terms(16) == [0, 1, 3, 6, 2, 7, 13, 20, 12, 21, 11, 22, 10, 23, 9, 24]
        assert first_occurrence(4, 10**6) == 131
        assert first_occurrence(19, 10**6) == 99734
        t = recaman_terms(25)
        assert t[24] == 42 and 42 in t[:24]


def test_c02_recaman_scale():
    with criterion(2) as notes:
        t0 = time.perf_counter()
        state = RecamanState.for_steps(10**7)
        state.advance(10**7 - 1)
        gen = time.perf_counter() - t0
        notes.append(f"10^7 terms in {gen:.2f}s (limit 30s)")
        assert gen < 30
        assert not state.is_seen(852655)
        assert recaman_terms(10**5) == recaman_naive(10**5)


def test_c03_gijswijt():
    with criterion(3, limit=600) as notes:
        g = gijswijt(3 * 10**5)
        assert g[:9] == [1, 1, 2, 1, 1, 2, 2, 2, 3]
        assert g.index(4) + 1 == 220
        assert max(g) == 4
        notes.append(f"fours={g.count(4)}")
        count = 0
        for n in range(1, 13):
            for s in product((1, 2, 3), repeat=n):
                assert curling_number(s).k == curling_brute(s), s
                count += 1
        notes.append(f"{count} words checked")


def test_c04_trajectories():
    with criterion(4, limit=300):
        f = classify_range(MapKind.ALIQUOT, 276, 10**4)
        assert len(f) == 274
        assert all(r.outcome in (Outcome.REACHED_ZERO, Outcome.ENTERED_CYCLE) for r in f.values())
        g = classify_range(MapKind.SIGMA_PHI_MEAN, 270, 10**4)
        assert len(g) == 268 and all(r.terminal for r in g.values())
        r = trajectory(MapKind.SIGMA_PHI_MEAN, 270, 50)
        assert r.outcome is Outcome.CAP_REACHED and len(r.terms) == 50
        assert all(a < b for a, b in zip(r.terms, r.terms[1:]))
        limit = 10**5
        sig, tot = divisor_sum_sieve(limit), totient_sieve(limit)
        for n in range(1, limit + 1):
            assert arith.sigma(n) == sig[n] and arith.phi(n) == tot[n], n
        amicable = trajectory(MapKind.ALIQUOT, 220, 100)
        assert amicable.terms == [220, 284] and amicable.cycle_length == 2


def _rule(family, prefix, c):
    p1, p2 = prefix[-1], prefix[-2]
    if family is LesFamily.EKG:
        return gcd(c, p1) > 1
    if family is LesFamily.YELLOWSTONE:
        return gcd(c, p2) > 1 and gcd(c, p1) == 1
    rest = c
    g = gcd(rest, p1)
    while g > 1:
        rest //= g
        g = gcd(rest, p1)
    return gcd(c, p1) > 1 and gcd(c, p2) == 1 and rest > 1


def test_c05_les():
    with criterion(5) as notes:
        assert les_generate(LesFamily.EKG, 11) == [1, 2, 4, 6, 3, 9, 12, 8, 10, 5, 15]
        t0 = time.perf_counter()
        les_generate(LesFamily.EKG, 10**5)
        ekg = time.perf_counter() - t0
        notes.append(f"10^5 EKG terms in {ekg:.2f}s (limit 60s)")
        assert ekg < 60
        assert enots_wolley_membership_scan(10**4) == []
        for family in LesFamily:
            terms = les_generate(family, 200)
            start = len(family.seed)
            assert terms[:start] == list(family.seed)
            for i in range(start, 200):
                used = set(terms[:i])
                assert terms[i] not in used and _rule(family, terms[:i], terms[i])
                assert not any(c not in used and _rule(family, terms[:i], c) for c in range(1, terms[i]))


def test_c06_stones():
    with criterion(6) as notes:
        assert verify(TWO_STONE_BOARD) is None
        t0 = time.perf_counter()
        one, two = solve(1), solve(2)
        took = time.perf_counter() - t0
        notes.append(f"solve(1), solve(2) in {took:.2f}s (limit 60s)")
        assert took < 60
        assert (one.best, one.exhaustive) == (1, True)
        assert (two.best, two.exhaustive) == (16, True)
        for n in range(3, 11):
            lin, chim = linear_construction(n), chimney_construction(n)
            assert verify(lin) is None and lin.max_label == 6 * (n - 1)
            assert verify(chim) is None and chim.max_label == 6 * n + 3
        runs = [solve(3, SearchConfig(radius=2, workers=w)) for w in (1, 2, 4)]
        assert len({(r.best, r.board.canonical_key()) for r in runs}) == 1
        runs = [solve(2, SearchConfig(radius=3, workers=w)) for w in (1, 2, 4)]
        assert len({(r.best, r.board.canonical_key(), r.exhaustive) for r in runs}) == 1


def test_c07_ordering_and_formats():
    with criterion(7):
        key = ordering_key([-1, 0, 1, 1, 2, 1, 17, 3, 2, 1])
        assert key.key == (2, 1, 17, 3, 2, 1)
        assert compare([1, 2, 4], [1, 2, 5]) is Ordering.BEFORE
        assert compare([1, 2], [1, 2, 4]) is Ordering.BEFORE
        assert compare([1, 2, 4, 3], [1, 2, 4, 3]) is Ordering.EQUAL
        assert compare([0, 0, 0], [1, 2]) is Ordering.BEFORE
        rng = random.Random(2024)
        flip = {Ordering.BEFORE: Ordering.AFTER, Ordering.AFTER: Ordering.BEFORE, Ordering.EQUAL: Ordering.EQUAL}
        for _ in range(10**4):
            a = [rng.randint(-4, 4) for _ in range(rng.randint(1, 6))]
            b = [rng.randint(-4, 4) for _ in range(rng.randint(1, 6))]
            ab = compare(a, b)
            assert compare(b, a) is flip[ab]
            ka, kb = ordering_key(a), ordering_key(b)
            assert (ab is Ordering.BEFORE) == (ka < kb) and (ab is Ordering.EQUAL) == (ka == kb)
        for _ in range(500):
            rows = list(enumerate((rng.randint(-(10**30), 10**30) for _ in range(rng.randint(0, 20))), rng.randint(-3, 9)))
            text = write_bfile(rows)
            assert parse_bfile(text) == rows and write_bfile(parse_bfile(text)) == text
            terms = tuple(v for _, v in rows) or (0,)
            line = format_stripped_line(SequenceRecord(rng.randint(1, 999999), terms))
            assert format_stripped_line(parse_stripped_line(line)) == line
        with pytest.raises(GapError):
            parse_bfile(b"0 1\n2 2\n")


def test_c08_corpus():
    with criterion(8) as notes:
        index = build_index(seed_corpus())
        assert lookup(index, [1, 2, 5, 14, 42, 132, 429])[0].anum == 108
        assert lookup(index, [1, 2, 4, 9, 21, 51, 127])[0].anum == 1006
        windows = 0
        for rec in seed_corpus():
            for w in range(3, 8):
                for i in range(len(rec.terms) - w + 1):
                    assert rec.anum in {r.anum for r in lookup(index, rec.terms[i : i + w])}
                    windows += 1
        notes.append(f"{windows} windows")


def test_c09_closed_forms():
    with criterion(9) as notes:
        assert pancake(4) == 11 and bagel(3) == 13
        assert catalan_by_recurrence(31) == [catalan(n) for n in range(31)]
        assert all(binomial_identity(n).holds for n in range(1, 51))
        t0 = time.perf_counter()
        worst = min(sigma_gap(n) for n in range(3, 10**6 + 1))
        took = time.perf_counter() - t0
        notes.append(f"sigma_gap sweep {took:.2f}s (limit 120s), min {worst}")
        assert worst >= 0 and took < 120


CLI_RUNS = [
    ["generate", "recaman", "--count", "200"],
    ["generate", "gijswijt", "--count", "300"],
    ["generate", "ekg", "--count", "100", "--bfile", "-"],
    ["generate", "yellowstone", "--count", "100"],
    ["generate", "enotswolley", "--count", "100"],
    ["generate", "catalan", "--count", "30", "--bfile", "-"],
    ["curling", "--terms", "3,2,4,4,2,4,4,2,4,4"],
    ["trajectory", "--map", "aliquot", "--start", "138", "--max-steps", "300"],
    ["trajectory", "--map", "sigmaphi", "--start", "270", "--max-steps", "50"],
    ["classify", "--map", "sigmaphi", "--below", "100", "--workers", "2"],
    ["lookup", "--query", "1,2,5,14,42,132,429"],
    ["order", "--a", "1,2,4", "--b", "1,2,4,3"],
    ["stones", "solve", "-n", "2", "--ascii", "--out", "-"],
    ["stones", "solve", "-n", "3", "--radius", "2", "--workers", "2", "--out", "-"],
    ["stones", "construct", "-n", "6", "--kind", "linear", "--ascii"],
    ["spiral", "--count", "64"],
    ["identity", "--n", "20"],
    ["sigmagap", "--n", "999999"],
    ["curling", "--terms", "1,,x"],
    ["sigmagap", "--n", "2"],
]


def _cli(argv):
    proc = subprocess.run([sys.executable, "-m", "seqforge", *argv], capture_output=True, timeout=300)
    return proc.returncode, proc.stdout, proc.stderr


def test_c10_cli_determinism():
    with criterion(10) as notes:
        for argv in CLI_RUNS:
            first, second = _cli(argv), _cli(argv)
            assert first == second, argv
            assert first[0] in (0, 1, 2)
        notes.append(f"{len(CLI_RUNS)} invocations run twice")
