"""Lexicographically earliest sequences of distinct positive integers.

Families:

* EKG (A064413): a(n) shares a factor with a(n-1).
* Yellowstone (A098550): a(n) shares a factor with a(n-2) and none with a(n-1).
* Enots Wolley (A336957): a(n) shares a factor with a(n-1), none with a(n-2),
  and has a prime factor that does not divide a(n-1).
"""

from __future__ import annotations

import enum
from math import gcd
from typing import Callable, Sequence

from .arith import distinct_prime_factors


class LesFamily(enum.Enum):
    EKG = "ekg"
    YELLOWSTONE = "yellowstone"
    ENOTS_WOLLEY = "enotswolley"

    @property
    def seed(self) -> tuple[int, ...]:
        return (1, 2, 3) if self is LesFamily.YELLOWSTONE else (1, 2)


class SearchExhausted(RuntimeError):
    def __init__(self, family: LesFamily, index: int, ceiling: int):
        self.family, self.index, self.ceiling = family, index, ceiling
        super().__init__(f"{family.value}: no candidate for a({index}) below {ceiling}")


def _strip(c: int, m: int) -> int:
    """c with every prime shared with m divided out."""
    g = gcd(c, m)
    while g > 1:
        c //= g
        g = gcd(c, m)
    return c


def allowed(family: LesFamily, prefix: Sequence[int], c: int) -> bool:
    """Whether c may follow ``prefix`` (distinctness is checked separately)."""
    n = len(prefix) + 1
    if n <= len(family.seed):
        return c == family.seed[n - 1]
    prev, prev2 = prefix[-1], prefix[-2]
    if family is LesFamily.EKG:
        return gcd(c, prev) > 1
    if family is LesFamily.YELLOWSTONE:
        return gcd(c, prev2) > 1 and gcd(c, prev) == 1
    return gcd(c, prev) > 1 and gcd(c, prev2) == 1 and _strip(c, prev) > 1


class LesGenerator:
    """Greedy generator with per-prime pointers to the smallest unused multiple."""

    def __init__(self, family: LesFamily, ceiling: int):
        self.family = family
        self.ceiling = ceiling
        self.terms: list[int] = []
        self.used: set[int] = set()
        self._ptr: dict[int, int] = {}

    def _first_unused_multiple(self, p: int) -> int:
        c = self._ptr.get(p, p)
        while c in self.used:
            c += p
        self._ptr[p] = c
        return c

    def _scan(self, primes: list[int], accept: Callable[[int], bool]) -> int | None:
        best: int | None = None
        for p in primes:
            c = self._first_unused_multiple(p)
            while best is None or c < best:
                if c > self.ceiling:
                    break
                if c not in self.used and accept(c):
                    best = c
                    break
                c += p
        return best

    def next_term(self) -> int:
        n = len(self.terms) + 1
        seed = self.family.seed
        if n <= len(seed):
            value: int | None = seed[n - 1]
        else:
            prev, prev2 = self.terms[-1], self.terms[-2]
            if self.family is LesFamily.EKG:
                value = self._scan(distinct_prime_factors(prev), lambda c: True)
            elif self.family is LesFamily.YELLOWSTONE:
                ps = [p for p in distinct_prime_factors(prev2) if prev % p]
                value = self._scan(ps, lambda c: gcd(c, prev) == 1)
            else:
                ps = [p for p in distinct_prime_factors(prev) if prev2 % p]
                value = self._scan(
                    ps, lambda c: gcd(c, prev2) == 1 and _strip(c, prev) > 1
                )
        if value is None:
            raise SearchExhausted(self.family, n, self.ceiling)
        self.terms.append(value)
        self.used.add(value)
        return value


def les_generate(family: LesFamily, count: int, ceiling: int | None = None) -> list[int]:
    """First ``count`` terms (offset 1). The search ceiling defaults to 50*count."""
    if count < len(family.seed):
        raise ValueError(f"count must be at least the seed length {len(family.seed)}")
    gen = LesGenerator(family, ceiling if ceiling is not None else 50 * count)
    for _ in range(count):
        gen.next_term()
    return gen.terms


def enots_wolley_membership_scan(count: int) -> list[int]:
    """Terms other than 1 and 2 with fewer than two distinct prime factors."""
    if count < 2:
        raise ValueError("count must be >= 2")
    terms = les_generate(LesFamily.ENOTS_WOLLEY, count)
    return [t for t in terms if t not in (1, 2) and len(distinct_prime_factors(t)) < 2]
