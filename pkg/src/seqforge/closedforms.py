"""Closed-form generators and identity checks used as oracles and corpus seeds."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt

from .arith import sigma


def pancake(n: int) -> int:
    """Maximum pieces from n straight cuts of a pancake."""
    if n < 0:
        raise ValueError("pancake needs n >= 0")
    return n * (n + 1) // 2 + 1


def bagel(n: int) -> int:
    """Maximum pieces from n plane cuts of a bagel, n >= 1 (zero cuts is 1 piece)."""
    if n < 1:
        raise ValueError("bagel formula holds for n >= 1 only")
    num = n * (n * n + 3 * n + 8)
    assert num % 6 == 0
    return num // 6


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("catalan needs n >= 0")
    return comb(2 * n, n) // (n + 1)


def catalan_by_recurrence(count: int) -> list[int]:
    """First ``count`` Catalan numbers from a(n) = 2(2n-1) a(n-1) / (n+1)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    out = [1]
    for n in range(1, count):
        q, r = divmod(2 * (2 * n - 1) * out[-1], n + 1)
        if r:
            raise ArithmeticError(f"inexact recurrence division at n={n}")
        out.append(q)
    return out


@dataclass(frozen=True)
class IdentityReport:
    n: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def binomial_identity(n: int) -> IdentityReport:
    """sum_{k=0}^{n-1} C(2n,k)^2 against C(4n,2n)/2 - C(2n,n)^2/2.

    The upper limit is n-1: with limit n the two sides already differ at n=1.
    """
    if n < 1:
        raise ValueError("binomial_identity needs n >= 1")
    lhs = sum(comb(2 * n, k) ** 2 for k in range(n))
    twice_rhs = comb(4 * n, 2 * n) - comb(2 * n, n) ** 2
    assert twice_rhs % 2 == 0
    return IdentityReport(n, lhs, twice_rhs // 2)


def sigma_gap(n: int) -> int:
    """floor(n*sqrt(n)) - sigma(n), exact via isqrt(n**3)."""
    if n < 3:
        raise ValueError("sigma_gap needs n >= 3")
    return isqrt(n**3) - sigma(n)
