"""Recaman's sequence: streaming generator, membership, and spiral geometry.

a(0) = 0; a(n) = a(n-1) - n if that is >= 0 and unseen, else a(n-1) + n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

INT64_MAX = (1 << 63) - 1


class RecamanState:
    """Single-owner generator state.

    Seen values below ``capacity`` live in a dense byte map; larger ones go
    into a sparse overflow set. When the overflow grows past a fraction of
    the capacity the dense map doubles and absorbs it.
    """

    def __init__(self, capacity: int = 1 << 16, watch: Iterable[int] = ()):
        self.capacity = max(16, capacity)
        self.seen_dense = bytearray(self.capacity)
        self.seen_sparse: set[int] = set()
        self.watch: dict[int, int | None] = {int(v): None for v in watch}
        self.step = 1
        self.current = 0
        self._mark(0, 0)

    @classmethod
    def for_steps(cls, n: int, watch: Iterable[int] = ()) -> RecamanState:
        """State sized for an n-step run (values stay within a few multiples of n)."""
        return cls(capacity=4 * n + 16, watch=watch)

    def is_seen(self, v: int) -> bool:
        if v < self.capacity:
            return v >= 0 and bool(self.seen_dense[v])
        return v in self.seen_sparse

    def _mark(self, v: int, index: int) -> None:
        if v < self.capacity:
            self.seen_dense[v] = 1
        else:
            if v > INT64_MAX:
                raise OverflowError(f"Recaman value {v} exceeds 64-bit range")
            self.seen_sparse.add(v)
            if len(self.seen_sparse) > self.capacity // 64:
                self._grow(v)
        if v in self.watch and self.watch[v] is None:
            self.watch[v] = index

    def _grow(self, at_least: int) -> None:
        cap = self.capacity
        while cap <= at_least:
            cap *= 2
        self.seen_dense.extend(bytes(cap - self.capacity))
        self.capacity = cap
        for v in [v for v in self.seen_sparse if v < cap]:
            self.seen_dense[v] = 1
            self.seen_sparse.discard(v)

    def next(self) -> tuple[int, int]:
        """Apply one step and return ``(index, value)``."""
        n = self.step
        cand = self.current - n
        if cand < 0 or self.is_seen(cand):
            cand = self.current + n
        self._mark(cand, n)
        self.current = cand
        self.step = n + 1
        return n, cand

    def advance(self, count: int, collect: bool = False) -> list[int] | None:
        """Apply ``count`` steps; optionally return the produced values."""
        out: list[int] | None = [] if collect else None
        dense = self.seen_dense
        cap = self.capacity
        watch = self.watch
        cur = self.current
        n = self.step
        end = n + count
        while n < end:
            c = cur - n
            if c < 0 or (c < cap and dense[c]):
                c = cur + n
            if c >= cap:
                # slow path: overflow set, growth, 64-bit check
                self.current, self.step = cur, n
                self.next()
                if out is not None:
                    out.append(self.current)
                dense, cap, cur, n = self.seen_dense, self.capacity, self.current, self.step
                continue
            dense[c] = 1
            if watch and c in watch and watch[c] is None:
                watch[c] = n
            cur = c
            n += 1
            if out is not None:
                out.append(c)
        self.current, self.step = cur, n
        return out

    def missing_below(self, bound: int) -> list[int]:
        return [v for v in range(bound) if not self.is_seen(v)]


def recaman_terms(count: int) -> list[int]:
    """First ``count`` terms, a(0) through a(count-1)."""
    if count < 1:
        return []
    state = RecamanState.for_steps(count)
    return [0] + (state.advance(count - 1, collect=True) or [])


def recaman_stream() -> Iterator[tuple[int, int]]:
    state = RecamanState()
    yield 0, 0
    while True:
        yield state.next()


def first_occurrence(target: int, max_steps: int) -> int | None:
    """Smallest i <= max_steps with a(i) == target, else None."""
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    if target == 0:
        return 0
    state = RecamanState.for_steps(min(max_steps, 1 << 24), watch=[target])
    # chunked so the search stops soon after the hit
    done = 0
    chunk = 1 << 12
    while done < max_steps and state.watch[target] is None:
        k = min(chunk, max_steps - done)
        state.advance(k)
        done += k
        chunk = min(chunk * 2, 1 << 20)
    return state.watch[target]


def missing_below(state: RecamanState, bound: int) -> list[int]:
    return state.missing_below(bound)


def naive_terms(count: int) -> list[int]:
    """Reference implementation: list membership over a plain set, no tricks."""
    seq = [0]
    seen = {0}
    for n in range(1, count):
        prev = seq[-1]
        if prev - n >= 0 and (prev - n) not in seen:
            nxt = prev - n
        else:
            nxt = prev + n
        seq.append(nxt)
        seen.add(nxt)
    return seq


class Side(enum.Enum):
    BELOW = "Below"
    ABOVE = "Above"


@dataclass(frozen=True)
class SpiralArc:
    start: int
    end: int
    diameter: int
    side: Side

    @property
    def left(self) -> int:
        return min(self.start, self.end)

    @property
    def right(self) -> int:
        return max(self.start, self.end)


def spiral(terms: Sequence[int]) -> list[SpiralArc]:
    """Semicircles joining consecutive terms, alternating below/above the axis."""
    arcs = []
    for i in range(len(terms) - 1):
        a, b = terms[i], terms[i + 1]
        if abs(b - a) != i + 1:
            raise ValueError(f"not a Recaman prefix: |{b} - {a}| != {i + 1}")
        side = Side.BELOW if i % 2 == 0 else Side.ABOVE
        arcs.append(SpiralArc(a, b, i + 1, side))
    return arcs


def spiral_svg(arcs: Sequence[SpiralArc], scale: float = 4.0, margin: float = 10.0) -> str:
    """Render arcs as SVG path elements with a viewport fitted to the extremes."""
    if not arcs:
        lo = hi = 0
        rmax = 0.0
    else:
        lo = min(a.left for a in arcs)
        hi = max(a.right for a in arcs)
        rmax = max(a.diameter for a in arcs) / 2
    width = (hi - lo) * scale + 2 * margin
    height = 2 * rmax * scale + 2 * margin
    axis_y = margin + rmax * scale

    def x(v: int) -> str:
        return f"{(v - lo) * scale + margin:g}"

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
        f'viewBox="0 0 {width:g} {height:g}">',
        f'<line x1="0" y1="{axis_y:g}" x2="{width:g}" y2="{axis_y:g}" stroke="#bbb" stroke-width="0.5"/>',
    ]
    for arc in arcs:
        r = arc.diameter * scale / 2
        # SVG y grows downward: "below the axis" means sweeping through larger y
        going_right = arc.end > arc.start
        sweep = int(going_right == (arc.side is Side.BELOW)) ^ 1
        lines.append(
            f'<path d="M {x(arc.start)} {axis_y:g} A {r:g} {r:g} 0 0 {sweep} {x(arc.end)} {axis_y:g}" '
            'fill="none" stroke="black" stroke-width="0.5"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
