"""The stepping stones problem.

Brown stones (value 1) go down first. White stones 2, 3, ... are then placed in
order, each on an empty square whose eight neighbours currently sum to its
label. a(n) is the largest label reachable with n brown stones.

Squares are ``(row, col)`` pairs.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping

Square = tuple[int, int]

NEIGHBOURS: tuple[Square, ...] = (
    (-1, -1), (-1, 0), (-1, 1),
    (0, -1),           (0, 1),
    (1, -1),  (1, 0),  (1, 1),
)

SYMMETRIES = (
    lambda r, c: (r, c),
    lambda r, c: (r, -c),
    lambda r, c: (-r, c),
    lambda r, c: (-r, -c),
    lambda r, c: (c, r),
    lambda r, c: (c, -r),
    lambda r, c: (-c, r),
    lambda r, c: (-c, -r),
)


class BoardFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Board:
    ones: frozenset[Square]
    whites: Mapping[Square, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "ones", frozenset(self.ones))
        object.__setattr__(self, "whites", dict(self.whites))
        clash = self.ones & self.whites.keys()
        if clash:
            raise BoardFormatError(f"square {min(clash)} holds two stones")
        labels = list(self.whites.values())
        if len(set(labels)) != len(labels):
            raise BoardFormatError("duplicate white label")
        if any(k < 2 for k in labels):
            raise BoardFormatError("white labels start at 2")

    @property
    def n(self) -> int:
        return len(self.ones)

    @property
    def max_label(self) -> int:
        return max(self.whites.values(), default=1 if self.ones else 0)

    def placement_order(self) -> list[tuple[int, Square]]:
        return sorted((k, sq) for sq, k in self.whites.items())

    def cells(self) -> dict[Square, int]:
        out = {sq: 1 for sq in self.ones}
        out.update(self.whites)
        return out

    def canonical_key(self) -> tuple[tuple[int, int, int], ...]:
        """Smallest encoding over the 8 symmetries, translated to the origin."""
        return _canonical(self.cells().items())

    def canonical(self) -> Board:
        key = self.canonical_key()
        return Board(
            frozenset((r, c) for r, c, v in key if v == 1),
            {(r, c): v for r, c, v in key if v > 1},
        )


def _normalise(items: Iterable[tuple[int, int, int]]) -> tuple[tuple[int, int, int], ...]:
    items = list(items)
    r0 = min(r for r, _, _ in items)
    c0 = min(c for _, c, _ in items)
    return tuple(sorted((r - r0, c - c0, v) for r, c, v in items))


def _canonical(cells: Iterable[tuple[Square, int]]) -> tuple[tuple[int, int, int], ...]:
    cells = list(cells)
    if not cells:
        return ()
    return min(_normalise((*f(r, c), v) for (r, c), v in cells) for f in SYMMETRIES)


def canonical_ones(ones: Iterable[Square]) -> tuple[Square, ...]:
    return tuple((r, c) for r, c, _ in _canonical((sq, 1) for sq in ones))


# -- verification ----------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    label: int
    square: Square
    observed: int
    reason: str

    def __str__(self) -> str:
        return f"label {self.label} at {self.square}: {self.reason} (neighbour sum {self.observed})"


def neighbour_sum(values: Mapping[Square, int], sq: Square) -> int:
    r, c = sq
    return sum(values.get((r + dr, c + dc), 0) for dr, dc in NEIGHBOURS)


def verify(board: Board) -> Violation | None:
    """Replay the white stones in label order; None when every placement is legal.

    Stones placed later than label k are invisible when k is checked.
    """
    placed: dict[Square, int] = {sq: 1 for sq in board.ones}
    expected = 2
    for k, sq in board.placement_order():
        s = neighbour_sum(placed, sq)
        if s != k:
            return Violation(k, sq, s, f"neighbours sum to {s}, not {k}")
        if k != expected:
            return Violation(k, sq, s, f"label {expected} is missing")
        placed[sq] = k
        expected += 1
    return None


# -- constructions ---------------------------------------------------------


def _board(ones: Iterable[Square], whites: Mapping[Square, int]) -> Board:
    return Board(frozenset(ones), dict(whites))


def _from_rows(rows: dict[int, dict[int, int | str]]) -> Board:
    """Transcription helper: ``"B"`` marks a brown stone."""
    ones, whites = [], {}
    for r, cols in rows.items():
        for c, v in cols.items():
            if v == "B":
                ones.append((r, c))
            else:
                whites[(r, c)] = int(v)
    return _board(ones, whites)


# two brown stones, a(2) = 16
TWO_STONE_BOARD = _from_rows({
    1: {1: 9, 2: 5, 3: 10, 4: 11},
    2: {2: 4, 3: "B"},
    3: {1: 12, 2: 8, 3: 3, 4: 2, 6: 16},
    4: {4: 6, 5: "B", 6: 15},
    5: {3: 13, 4: 7, 5: 14},
})

# four brown stones reaching 38
FOUR_STONE_BOARD = _from_rows({
    1: {1: 35, 2: 18, 3: 36, 5: 23, 7: 21, 9: 32},
    2: {2: 17, 3: "B", 5: 14, 6: 9, 8: 12, 9: 20},
    3: {2: 34, 3: 16, 4: 15, 6: 5, 7: 4, 8: 8, 11: 26, 12: 27},
    4: {4: 31, 6: 10, 7: "B", 8: 3, 9: 19, 10: 25, 12: "B", 13: 28},
    5: {6: 11, 8: 2, 9: 6, 11: 33, 13: 29},
    6: {6: 24, 7: 13, 8: 22, 9: "B", 10: 7},
    7: {6: 37, 9: 30, 10: 38},
})


def linear_construction(n: int) -> Board:
    """Two-row snake along n-1 brown stones spaced three apart; reaches 6(n-1)."""
    if n < 3:
        raise ValueError("linear construction needs n >= 3")
    last = 3 * (n - 1)
    ones = [(1, 1)] + [(3, 3 * j) for j in range(1, n)]
    whites = {(2, c): c for c in range(2, last + 1)}
    whites[(3, last + 1)] = last + 1
    for c in range(last, 1, -1):
        whites[(4, c)] = 6 * n - 4 - c
    return _board(ones, whites)


def chimney_construction(n: int) -> Board:
    """The two-stone board plus a chimney of n-2 stones; reaches 6n+3."""
    if n < 3:
        raise ValueError("chimney construction needs n >= 3")
    base = {(r + 7, c): k for (r, c), k in TWO_STONE_BOARD.whites.items()}
    ones = [(r + 7, c) for r, c in TWO_STONE_BOARD.ones]
    top = 8 - 3 * (n - 3)
    ones += [(r, 8) for r in range(8, top - 1, -3)]
    whites = dict(base)
    whites[(9, 7)] = 17
    for r in range(8, top - 1, -1):
        whites[(r, 7)] = 18 + (8 - r)
    apex = 19 + 3 * (n - 3)
    whites[(top - 1, 8)] = apex
    for r in range(top, 10):
        whites[(r, 9)] = apex + 1 + (r - top)
    return _board(ones, whites)


# -- text formats ----------------------------------------------------------


def board_to_text(board: Board) -> str:
    doc = {
        "ones": [list(sq) for sq in sorted(board.ones)],
        "whites": [[r, c, k] for (r, c), k in sorted(board.whites.items())],
    }
    return json.dumps(doc) + "\n"


def board_from_text(text: str) -> Board:
    try:
        doc = json.loads(text)
        ones = [(int(r), int(c)) for r, c in doc["ones"]]
        whites = [(int(r), int(c), int(k)) for r, c, k in doc["whites"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise BoardFormatError(f"malformed board document: {exc}") from None
    if len(set(ones)) != len(ones):
        raise BoardFormatError("two brown stones on one square")
    squares = [(r, c) for r, c, _ in whites]
    if len(set(squares)) != len(squares):
        raise BoardFormatError("two white stones on one square")
    labels = sorted(k for _, _, k in whites)
    if labels != list(range(2, 2 + len(labels))):
        raise BoardFormatError("white labels must be 2..M without gaps or repeats")
    return Board(frozenset(ones), {(r, c): k for r, c, k in whites})


def render_ascii(board: Board) -> str:
    """Text grid: brown stones as [1], empty squares as ".", one row per line."""
    cells = board.cells()
    if not cells:
        return ""
    rows = [r for r, _ in cells]
    cols = [c for _, c in cells]
    width = max(3, len(str(board.max_label)) + 1)
    lines = []
    for r in range(min(rows), max(rows) + 1):
        out = []
        for c in range(min(cols), max(cols) + 1):
            if (r, c) in board.ones:
                out.append("[1]".rjust(width))
            elif (r, c) in board.whites:
                out.append(str(board.whites[(r, c)]).rjust(width))
            else:
                out.append(".".rjust(width))
        lines.append(" ".join(out).rstrip())
    return "\n".join(lines) + "\n"


def render_svg(board: Board, cell: int = 28) -> str:
    cells = board.cells()
    r0 = min((r for r, _ in cells), default=0)
    c0 = min((c for _, c in cells), default=0)
    h = (max((r for r, _ in cells), default=0) - r0 + 1) * cell
    w = (max((c for _, c in cells), default=0) - c0 + 1) * cell
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">']
    for (r, c), v in sorted(cells.items()):
        x, y = (c - c0) * cell, (r - r0) * cell
        fill = "#8b5a2b" if v == 1 else "#ffffff"
        ink = "#ffffff" if v == 1 else "#000000"
        parts.append(
            f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" fill="{fill}" stroke="#444"/>'
            f'<text x="{x + cell // 2}" y="{y + cell * 2 // 3}" font-size="{cell // 2}" '
            f'text-anchor="middle" fill="{ink}">{v}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# -- search ----------------------------------------------------------------


@dataclass(frozen=True)
class SearchConfig:
    radius: int = 6
    beam: int | None = None  # None: exhaustive DFS in the box; int: beam width
    workers: int = 1
    node_limit: int | None = None
    warm_start: Board | None = None


@dataclass(frozen=True)
class SolveResult:
    n: int
    best: int
    board: Board
    exhaustive: bool
    nodes: int = 0


class _Field:
    """Incrementally maintained neighbour sums with buckets by sum."""

    def __init__(self, ones: Iterable[Square]):
        self.sums: dict[Square, int] = {}
        self.occupied: set[Square] = set()
        self.buckets: dict[int, set[Square]] = {}
        for sq in ones:
            self.occupied.add(sq)
            self._discard(sq)
            self._spread(sq, 1)

    def _discard(self, sq: Square) -> None:
        s = self.sums.get(sq, 0)
        if s:
            self.buckets[s].discard(sq)

    def _spread(self, sq: Square, v: int) -> None:
        r, c = sq
        sums, occ, buckets = self.sums, self.occupied, self.buckets
        for dr, dc in NEIGHBOURS:
            nb = (r + dr, c + dc)
            old = sums.get(nb, 0)
            new = old + v
            if new:
                sums[nb] = new
            else:
                del sums[nb]
            if nb not in occ:
                if old:
                    buckets[old].discard(nb)
                if new:
                    buckets.setdefault(new, set()).add(nb)

    def candidates(self, k: int) -> list[Square]:
        return sorted(self.buckets.get(k, ()))

    def place(self, sq: Square, k: int) -> None:
        self._discard(sq)
        self.occupied.add(sq)
        self._spread(sq, k)

    def remove(self, sq: Square, k: int) -> None:
        self._spread(sq, -k)
        self.occupied.discard(sq)
        s = self.sums.get(sq, 0)
        if s:
            self.buckets.setdefault(s, set()).add(sq)


class _NodeLimit(Exception):
    pass


def _dfs_config(ones: tuple[Square, ...], node_limit: int | None) -> tuple[int, tuple[Square, ...], int, bool]:
    """Exhaustive white-stone search from fixed brown stones.

    Returns (best label, placement path of the first best found, nodes, complete).
    """
    fld = _Field(ones)
    path: list[Square] = []
    best = [1, ()]
    nodes = [0]

    def go(k: int) -> None:
        nodes[0] += 1
        if node_limit is not None and nodes[0] > node_limit:
            raise _NodeLimit
        cands = fld.candidates(k)
        if not cands:
            if k - 1 > best[0]:
                best[0], best[1] = k - 1, tuple(path)
            return
        for sq in cands:
            fld.place(sq, k)
            path.append(sq)
            go(k + 1)
            path.pop()
            fld.remove(sq, k)

    complete = True
    try:
        go(2)
    except _NodeLimit:
        complete = False
    return best[0], best[1], nodes[0], complete


def _board_from_path(ones: Iterable[Square], path: Iterable[Square]) -> Board:
    return Board(frozenset(ones), {sq: k for k, sq in enumerate(path, start=2)})


def brown_configurations(n: int, radius: int) -> list[tuple[Square, ...]]:
    """Canonical n-sets of squares spanning at most 2*radius+1 in each direction.

    Sets are counted once up to translation and the 8 symmetries of the grid.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    span = 2 * radius
    offsets = [(dr, dc) for dr in range(0, span + 1) for dc in range(-span, span + 1)
               if dr > 0 or dc > 0]
    seen: set[tuple[Square, ...]] = set()
    for rest in combinations(offsets, n - 1):
        pts = ((0, 0),) + rest
        cols = [c for _, c in pts]
        if max(cols) - min(cols) > span:
            continue
        seen.add(canonical_ones(pts))
    return sorted(seen)


def _solve_chunk(args: tuple[list[tuple[Square, ...]], int | None]) -> list[tuple[int, tuple, Board | None, int, bool]]:
    configs, node_limit = args
    out = []
    for ones in configs:
        best, path, nodes, complete = _dfs_config(ones, node_limit)
        board = _board_from_path(ones, path).canonical()
        out.append((best, board.canonical_key(), board, nodes, complete))
    return out


def _pick(results: Iterable[tuple[int, tuple, Board, int, bool]]) -> tuple[int, tuple, Board]:
    # highest label first, then the smallest canonical encoding
    best = min(results, key=lambda t: (-t[0], t[1]))
    return best[0], best[1], best[2]


def solve(n: int, config: SearchConfig = SearchConfig()) -> SolveResult:
    """Best label reachable with n brown stones under ``config``.

    The DFS mode tries every canonical brown configuration that fits in the box
    and every white placement from it. That is provably complete only for
    n <= 2: the 2 needs two brown stones in one 3x3 neighbourhood, so any
    useful pair is within Chebyshev distance 2 and fits in a radius-1 box.
    For n >= 3 the answer is a certified lower bound.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if config.beam is not None:
        return beam_solve(n, config)
    configs = brown_configurations(n, config.radius)
    workers = max(1, config.workers)
    chunks = [configs[i::workers] for i in range(workers)]
    jobs = [(chunk, config.node_limit) for chunk in chunks if chunk]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_solve_chunk, jobs))
    else:
        parts = [_solve_chunk(j) for j in jobs]
    results = [r for part in parts for r in part]
    nodes = sum(r[3] for r in results)
    complete = all(r[4] for r in results)
    if config.warm_start is not None:
        ws = config.warm_start
        if ws.n != n or verify(ws) is not None:
            raise ValueError("warm start must be a valid board with n brown stones")
        results.append((ws.max_label, ws.canonical_key(), ws.canonical(), 0, True))
    best, _, board = _pick(results)
    exhaustive = complete and n <= 2 and config.radius >= 1
    return SolveResult(n, best, board, exhaustive, nodes)


# -- heuristic search ------------------------------------------------------


@dataclass
class _BeamState:
    ones: frozenset[Square]
    path: tuple[Square, ...]
    values: dict[Square, int]

    def sums_near(self) -> dict[Square, int]:
        sums: dict[Square, int] = {}
        for (r, c), v in self.values.items():
            for dr, dc in NEIGHBOURS:
                nb = (r + dr, c + dc)
                if nb not in self.values:
                    sums[nb] = sums.get(nb, 0) + v
        return sums


def _white_adjacent(state: _BeamState, sq: Square) -> bool:
    r, c = sq
    return any(state.values.get((r + dr, c + dc), 1) > 1 for dr, dc in NEIGHBOURS)


def _expand(state: _BeamState, k: int, n: int) -> Iterator[_BeamState]:
    """Children placing label k, optionally dropping new brown stones beside it.

    A brown stone may be added late only where no white stone is adjacent yet:
    then it is indistinguishable from one laid down at the start.
    """
    budget = n - len(state.ones)
    sums = state.sums_near()
    for sq in sorted(sums):
        s = sums[sq]
        need = k - s
        if need < 0 or need > budget:
            continue
        if need == 0:
            values = dict(state.values)
            values[sq] = k
            yield _BeamState(state.ones, state.path + (sq,), values)
            continue
        r, c = sq
        spots = [
            (r + dr, c + dc) for dr, dc in NEIGHBOURS
            if (r + dr, c + dc) not in state.values
            and not _white_adjacent(state, (r + dr, c + dc))
        ]
        for extra in combinations(spots, need):
            values = dict(state.values)
            for e in extra:
                values[e] = 1
            values[sq] = k
            yield _BeamState(state.ones | set(extra), state.path + (sq,), values)


def _score(state: _BeamState, k: int, n: int) -> tuple:
    # favour unused brown stones and many squares whose sum is still ahead of k
    sums = state.sums_near()
    ahead = sum(1 for v in sums.values() if k < v <= k + 8)
    return (-(n - len(state.ones)) * 4 - ahead, state.path)


def _initial_states(n: int, config: SearchConfig) -> list[_BeamState]:
    states = []
    if config.warm_start is not None:
        ones = config.warm_start.ones
        states.append(_BeamState(frozenset(ones), (), {sq: 1 for sq in ones}))
    if n >= 2:
        # the 2 needs two brown stones around one square; few inequivalent pairs
        seen = set()
        for a, b in combinations(NEIGHBOURS, 2):
            key = canonical_ones([a, b])
            if key not in seen:
                seen.add(key)
                states.append(_BeamState(frozenset([a, b]), (), {a: 1, b: 1}))
    return states


def beam_solve(n: int, config: SearchConfig) -> SolveResult:
    """Beam search over placements with late brown-stone insertion (heuristic)."""
    width = config.beam or 1
    best_board = Board(frozenset({(0, 0)}), {})
    best_label = 1
    beam = _initial_states(n, config)
    k = 2
    nodes = 0
    while beam:
        children: dict[tuple, _BeamState] = {}
        for st in beam:
            for child in _expand(st, k, n):
                nodes += 1
                key = child.path, tuple(sorted(child.ones))
                children.setdefault(key, child)
        if not children:
            break
        ranked = sorted(children.values(), key=lambda s: _score(s, k, n))
        beam = ranked[:width]
        top = beam[0]
        if k > best_label:
            best_label = k
            best_board = _board_from_path(top.ones, top.path)
        k += 1
    known = [config.warm_start] if config.warm_start is not None else []
    if n >= 3:
        known += [linear_construction(n), chimney_construction(n)]
    for b in known:
        if b.n == n and b.max_label > best_label and verify(b) is None:
            best_label, best_board = b.max_label, b
    # unused brown stones can sit anywhere far away
    ones = set(best_board.ones)
    far = 10**6
    while len(ones) < n:
        ones.add((far, far))
        far += 10
    board = Board(frozenset(ones), best_board.whites)
    return SolveResult(n, best_label, board, False, nodes)
