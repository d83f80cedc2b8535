"""Curling numbers, Gijswijt's sequence, and a curling-number-conjecture harness.

The curling number of a sequence S is the largest k such that S = X Y^k for
some (possibly empty) X and non-empty Y.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class CurlingDecomposition:
    y_len: int
    k: int
    x_len: int


def _repeats(seq: Sequence[int], m: int) -> int:
    """How many copies of the final length-m block end the sequence."""
    L = len(seq)
    k = 1
    while (k + 1) * m <= L:
        start = L - (k + 1) * m
        for j in range(m):
            if seq[start + j] != seq[L - m + j]:
                return k
        k += 1
    return k


def curling_number(seq: Sequence[int]) -> CurlingDecomposition:
    """Maximal-k decomposition; ties go to the shortest block."""
    L = len(seq)
    if L == 0:
        raise ValueError("curling number of an empty sequence is undefined")
    best_k, best_m = 1, 1
    for m in range(1, L // 2 + 1):
        if L // m <= best_k:
            break  # block too long to beat the current best
        k = _repeats(seq, m)
        if k > best_k:
            best_k, best_m = k, m
    return CurlingDecomposition(best_m, best_k, L - best_m * best_k)


class CurlingTracker:
    """Incremental curling numbers for a sequence that only grows at the end.

    ``run[m-1]`` holds the length of the longest common suffix of the sequence
    and the sequence with its last m terms removed. Appending x extends every
    run whose comparison term equals x and zeroes the rest, one vector pass per
    step. Only block lengths m <= L/2 can give k >= 2, so a run is created
    lazily when its block length first fits twice.
    """

    def __init__(self, initial: Iterable[int] = (), capacity: int = 1024, dtype=np.int64):
        self._dtype = dtype
        self._cap = max(16, capacity)
        self._seq = np.zeros(self._cap, dtype=dtype)
        self._run = np.zeros(self._cap // 2 + 1, dtype=np.int32)
        self._m = np.arange(1, self._cap // 2 + 2, dtype=np.int32)
        self.length = 0
        for x in initial:
            self.append(x)

    def _grow(self) -> None:
        cap = self._cap * 2
        seq = np.zeros(cap, dtype=self._dtype)
        seq[: self._cap] = self._seq
        run = np.zeros(cap // 2 + 1, dtype=np.int32)
        run[: len(self._run)] = self._run
        self._seq, self._run = seq, run
        self._m = np.arange(1, cap // 2 + 2, dtype=np.int32)
        self._cap = cap

    def _fresh_run(self, m: int) -> int:
        """Common suffix length of seq[:L] and seq[:L-m], computed directly."""
        s = self._seq
        hi = self.length - 1
        done = 0
        limit = self.length - m
        chunk = 32
        while done < limit:
            n = min(chunk, limit - done)
            a = s[hi - done - n + 1 : hi - done + 1]
            b = s[hi - m - done - n + 1 : hi - m - done + 1]
            diff = np.flatnonzero(a != b)
            if len(diff):
                return done + (n - 1 - int(diff[-1]))
            done += n
            chunk *= 4
        return limit

    def append(self, x: int) -> None:
        L = self.length
        if L == self._cap:
            self._grow()
        M = L // 2
        if M:
            run = self._run[:M]
            # compare x against seq[L-m] for m = 1..M
            run += 1
            run *= self._seq[L - 1 : L - 1 - M : -1] == x
        self._seq[L] = x
        self.length = L + 1
        if (L + 1) // 2 > M:
            self._run[M] = self._fresh_run(M + 1)

    def curling(self) -> int:
        L = self.length
        if L == 0:
            raise ValueError("empty sequence")
        k = 1
        while True:
            # (k+1) copies of a length-m block: run >= k*m with m <= L/(k+1)
            top = L // (k + 1)
            if top == 0 or not np.any(self._run[:top] >= k * self._m[:top]):
                return k
            k += 1

    def terms(self) -> list[int]:
        return self._seq[: self.length].tolist()


def gijswijt(count: int) -> list[int]:
    """First ``count`` terms of Gijswijt's sequence, a(1) = 1."""
    if count < 1:
        raise ValueError("count must be >= 1")
    tracker = CurlingTracker(capacity=count, dtype=np.int8)
    out = [1]
    tracker.append(1)
    while len(out) < count:
        k = tracker.curling()
        out.append(k)
        tracker.append(k)
    return out


def gijswijt_naive(count: int) -> list[int]:
    seq = [1]
    while len(seq) < count:
        seq.append(curling_number(seq).k)
    return seq


@dataclass(frozen=True)
class ExtendResult:
    tail_length: int
    reached_one: bool


def curling_extend(start: Sequence[int], cap: int) -> ExtendResult:
    """Append curling numbers until a 1 is appended or ``cap`` terms were added."""
    if not start:
        raise ValueError("start must be non-empty")
    seq = list(start)
    for appended in range(1, cap + 1):
        k = curling_number(seq).k
        seq.append(k)
        if k == 1:
            return ExtendResult(appended, True)
    return ExtendResult(cap, False)


def conjecture_sweep(alphabet: Sequence[int], max_len: int, cap: int) -> dict:
    """Run curling_extend on every start over ``alphabet`` up to ``max_len`` terms.

    Returns a summary with the number of starts, the longest tail seen (and
    its start), and any starts that did not reach 1 within ``cap``.
    """
    from itertools import product

    failures: list[tuple[int, ...]] = []
    longest = (0, ())
    total = 0
    for n in range(1, max_len + 1):
        for start in product(alphabet, repeat=n):
            total += 1
            res = curling_extend(start, cap)
            if not res.reached_one:
                failures.append(start)
            elif res.tail_length > longest[0]:
                longest = (res.tail_length, start)
    return {"starts": total, "longest_tail": longest[0], "longest_start": longest[1], "failures": failures}
