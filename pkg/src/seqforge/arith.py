"""Exact integer arithmetic: factorization, divisor sum, totient, gcd.

Everything here works on Python ints, so trajectories whose terms run far past
64 bits are handled without special cases.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

TRIAL_LIMIT = 10**6
_RHO_SEED = 0x5EED

# Deterministic Miller-Rabin witness set, valid for n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_BOUND = 3317044064679887385961981


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


_PRIMES = _small_primes(TRIAL_LIMIT)
_EARLY = 1000  # after this many trial primes, check whether the cofactor is prime


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prod = 1
        for p, e in self.factors:
            if e < 1:
                raise ValueError(f"exponent {e} for prime {p} must be >= 1")
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors {self.factors} do not multiply to {self.value}")
        primes = [p for p, _ in self.factors]
        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise ValueError("primes must be strictly increasing")

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    """Strong Lucas test with Selfridge parameters (method A)."""
    if math.isqrt(n) ** 2 == n:
        return False
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # binary ladder for U_d, V_d
    U, V, Qk = 1, P, Q % n
    inv2 = pow(2, -1, n)
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test.

    Deterministic Miller-Rabin below 3.3e24; Baillie-PSW above that, which has
    no known counterexample.
    """
    if n < 2:
        return False
    for p in _PRIMES[:50]:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < _PRIMES[49] ** 2:
        return True
    if n < _MR_DETERMINISTIC_BOUND:
        return all(_strong_probable_prime(n, a) for a in _MR_BASES)
    return _strong_probable_prime(n, 2) and _strong_lucas_probable_prime(n)


def _brent_rho(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite n."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split_large(n: int, out: dict[int, int], rng: random.Random) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split_large(r, out, rng)
        _split_large(r, out, rng)
        return
    d = _brent_rho(n, rng)
    _split_large(d, out, rng)
    _split_large(n // d, out, rng)


@lru_cache(maxsize=1 << 16)
def _factor_tuple(n: int) -> tuple[tuple[int, int], ...]:
    found: dict[int, int] = {}
    m = n
    for i, p in enumerate(_PRIMES):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
        if i == _EARLY and m > 1 and is_prime(m):
            break
    else:
        # trial division exhausted below TRIAL_LIMIT; whatever is left has
        # only prime factors above it
        if m > 1:
            # fixed seed: results never depend on call order
            _split_large(m, found, random.Random(_RHO_SEED))
            m = 1
    if m > 1:
        found[m] = found.get(m, 0) + 1
    return tuple(sorted(found.items()))


def factorize(n: int) -> Factorization:
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    return Factorization(n, _factor_tuple(n))


def sigma(n: int) -> int:
    """Sum of all positive divisors of n."""
    if n < 1:
        raise ValueError(f"sigma needs n >= 1, got {n}")
    total = 1
    for p, e in _factor_tuple(n):
        total *= (p ** (e + 1) - 1) // (p - 1)
    return total


def phi(n: int) -> int:
    """Euler's totient."""
    if n < 1:
        raise ValueError(f"phi needs n >= 1, got {n}")
    total = 1
    for p, e in _factor_tuple(n):
        total *= (p - 1) * p ** (e - 1)
    return total


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def distinct_prime_factors(n: int) -> list[int]:
    return [p for p, _ in _factor_tuple(n)] if n > 1 else []
