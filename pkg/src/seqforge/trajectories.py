"""Iterating f(n) = sigma(n) - n and g(n) = (sigma(n) + phi(n)) / 2."""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .arith import phi, sigma


class MapKind(enum.Enum):
    ALIQUOT = "aliquot"
    SIGMA_PHI_MEAN = "sigmaphi"


class FractionSignal:
    """Marker for a non-integral image under the sigma/phi mean map."""

    __slots__ = ("numerator",)

    def __init__(self, numerator: int):
        self.numerator = numerator  # sigma + phi, odd

    def __repr__(self) -> str:
        return f"{self.numerator}/2"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FractionSignal) and other.numerator == self.numerator

    def __hash__(self) -> int:
        return hash(("frac", self.numerator))


def step(kind: MapKind, t: int) -> int | FractionSignal:
    if t < 1:
        raise ValueError(f"map is defined for t >= 1, got {t}")
    if kind is MapKind.ALIQUOT:
        return sigma(t) - t
    total = sigma(t) + phi(t)
    if total % 2:
        return FractionSignal(total)
    return total // 2


class Outcome(enum.Enum):
    REACHED_ZERO = "ReachedZero"
    ENTERED_CYCLE = "EnteredCycle"
    HIT_FRACTION = "HitFraction"
    CAP_REACHED = "CapReached"


@dataclass
class TrajectoryReport:
    kind: MapKind
    start: int
    terms: list[int] = field(default_factory=list)
    outcome: Outcome = Outcome.CAP_REACHED
    cycle_length: int | None = None
    fraction: FractionSignal | None = None

    @property
    def distinct_count(self) -> int:
        return len(set(self.terms))

    @property
    def terminal(self) -> bool:
        return self.outcome is not Outcome.CAP_REACHED

    def outcome_label(self) -> str:
        if self.outcome is Outcome.ENTERED_CYCLE:
            return f"EnteredCycle({self.cycle_length})"
        return self.outcome.value


def trajectory(kind: MapKind, start: int, max_steps: int) -> TrajectoryReport:
    """Iterate from ``start`` until 0, a repeat, a fraction, or ``max_steps`` terms.

    ``terms`` always begins with ``start``. For a cycle, the repeated value is
    not appended again; ``cycle_length`` is the distance back to its first
    occurrence.
    """
    if start < 1 or max_steps < 1:
        raise ValueError("start and max_steps must be >= 1")
    report = TrajectoryReport(kind, start, [start])
    first_seen = {start: 0}
    t = start
    while len(report.terms) < max_steps:
        if t == 0:
            report.outcome = Outcome.REACHED_ZERO
            return report
        nxt = step(kind, t)
        if isinstance(nxt, FractionSignal):
            report.outcome = Outcome.HIT_FRACTION
            report.fraction = nxt
            return report
        if nxt in first_seen:
            report.outcome = Outcome.ENTERED_CYCLE
            report.cycle_length = len(report.terms) - first_seen[nxt]
            return report
        first_seen[nxt] = len(report.terms)
        report.terms.append(nxt)
        t = nxt
    if t == 0:
        report.outcome = Outcome.REACHED_ZERO
    return report


def _classify_one(args: tuple[MapKind, int, int]) -> tuple[int, TrajectoryReport]:
    kind, n, max_steps = args
    return n, trajectory(kind, n, max_steps)


def classify_range(
    kind: MapKind, bound: int, max_steps: int, workers: int = 1
) -> dict[int, TrajectoryReport]:
    """Reports for every 1 < n < bound, keyed and ordered by start."""
    if bound < 2:
        raise ValueError("bound must be >= 2")
    jobs = [(kind, n, max_steps) for n in range(2, bound)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_classify_one, jobs, chunksize=16))
    else:
        results = [_classify_one(j) for j in jobs]
    return dict(sorted(results))
