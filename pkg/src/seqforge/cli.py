"""Command-line front end: ``seqforge <subcommand> ...``.

Exit status: 0 success, 1 usage error, 2 domain error (parse failure,
verifier violation, search exhaustion). Output is plain text, one record per
line, and byte-identical across repeated runs.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import closedforms, corpus, curling, les, recaman, seqmodel, stones, trajectories


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").strip(",").split(",") if t != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


GENERATORS: dict[str, tuple[int, Callable[[int], list[int]]]] = {
    "recaman": (0, recaman.recaman_terms),
    "gijswijt": (1, curling.gijswijt),
    "ekg": (1, lambda n: les.les_generate(les.LesFamily.EKG, n)),
    "yellowstone": (1, lambda n: les.les_generate(les.LesFamily.YELLOWSTONE, n)),
    "enotswolley": (1, lambda n: les.les_generate(les.LesFamily.ENOTS_WOLLEY, n)),
    "catalan": (0, lambda n: [closedforms.catalan(i) for i in range(n)]),
    "pancake": (0, lambda n: [closedforms.pancake(i) for i in range(n)]),
    "bagel": (1, lambda n: [closedforms.bagel(i) for i in range(1, n + 1)]),
}

MAPS = {"aliquot": trajectories.MapKind.ALIQUOT, "sigmaphi": trajectories.MapKind.SIGMA_PHI_MEAN}


def cmd_generate(args) -> int:
    offset, gen = GENERATORS[args.family]
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    terms = gen(args.count)
    if args.bfile:
        _emit(seqmodel.write_bfile(seqmodel.rows_from_terms(terms, offset)).decode(), args.bfile)
    else:
        print(",".join(map(str, terms)))
    return 0


def cmd_curling(args) -> int:
    d = curling.curling_number(args.terms)
    print(f"k={d.k} y_len={d.y_len} x_len={d.x_len}")
    return 0


def _report_line(r: trajectories.TrajectoryReport) -> str:
    return f"{r.start} {r.outcome_label()} terms={len(r.terms)} distinct={r.distinct_count}"


def cmd_trajectory(args) -> int:
    r = trajectories.trajectory(MAPS[args.map], args.start, args.max_steps)
    if args.bfile:
        _emit(seqmodel.write_bfile(seqmodel.rows_from_terms(r.terms, 0)).decode(), args.bfile)
        return 0
    print(_report_line(r))
    print(",".join(map(str, r.terms)))
    return 0


def cmd_classify(args) -> int:
    reports = trajectories.classify_range(MAPS[args.map], args.below, args.max_steps, args.workers)
    for r in reports.values():
        print(_report_line(r))
    return 0


def cmd_lookup(args) -> int:
    index = corpus.build_index(corpus.load_corpus(args.corpus))
    for res in corpus.lookup(index, args.query):
        print(f"{res.rank} {seqmodel.format_anum(res.anum)} {res.match_position} {res.match_length}")
    return 0


def cmd_order(args) -> int:
    print(seqmodel.compare(args.a, args.b).value)
    return 0


def _board_output(board: stones.Board, args) -> None:
    if getattr(args, "svg", None):
        Path(args.svg).write_text(stones.render_svg(board), encoding="utf-8")
    if getattr(args, "ascii", False):
        sys.stdout.write(stones.render_ascii(board))
    if getattr(args, "out", None):
        _emit(stones.board_to_text(board), args.out)


def cmd_stones(args) -> int:
    if args.action == "verify":
        if not args.board:
            raise UsageError("stones verify needs --board")
        board = stones.board_from_text(Path(args.board).read_text(encoding="utf-8"))
        bad = stones.verify(board)
        if bad is not None:
            raise DomainError(f"invalid board: {bad}")
        print(f"valid n={board.n} max={board.max_label}")
        _board_output(board, args)
        return 0
    if args.n is None:
        raise UsageError(f"stones {args.action} needs -n")
    if args.action == "construct":
        build = stones.linear_construction if args.kind == "linear" else stones.chimney_construction
        board = build(args.n)
        print(f"kind={args.kind} n={board.n} max={board.max_label}")
        _board_output(board, args)
        return 0
    warm = None
    if args.warm:
        warm = stones.board_from_text(Path(args.warm).read_text(encoding="utf-8"))
    cfg = stones.SearchConfig(
        radius=args.radius, beam=args.beam, workers=args.workers,
        node_limit=args.node_limit, warm_start=warm,
    )
    res = stones.solve(args.n, cfg)
    print(f"n={res.n} best={res.best} exhaustive={'true' if res.exhaustive else 'false'}")
    _board_output(res.board, args)
    return 0


def cmd_spiral(args) -> int:
    arcs = recaman.spiral(recaman.recaman_terms(args.count))
    _emit(recaman.spiral_svg(arcs), args.svg)
    if args.svg not in (None, "-"):
        print(f"arcs={len(arcs)}")
    return 0


def cmd_identity(args) -> int:
    r = closedforms.binomial_identity(args.n)
    print(f"n={r.n} lhs={r.lhs} rhs={r.rhs} holds={'true' if r.holds else 'false'}")
    return 0


def cmd_sigmagap(args) -> int:
    print(closedforms.sigma_gap(args.n))
    return 0


class DomainError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="seqforge", description="Integer sequence engine.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="print the first terms of a sequence")
    g.add_argument("family", choices=sorted(GENERATORS))
    g.add_argument("--count", type=int, required=True)
    g.add_argument("--bfile", metavar="PATH", help="write a b-file instead ('-' for stdout)")
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("curling", help="curling number of a term list")
    c.add_argument("--terms", type=_int_list, required=True)
    c.set_defaults(func=cmd_curling)

    for name, func, helptext in (
        ("trajectory", cmd_trajectory, "iterate a map from one start"),
        ("classify", cmd_classify, "classify all starts below a bound"),
    ):
        t = sub.add_parser(name, help=helptext)
        t.add_argument("--map", choices=sorted(MAPS), required=True)
        if name == "trajectory":
            t.add_argument("--start", type=int, required=True)
            t.add_argument("--bfile", metavar="PATH")
        else:
            t.add_argument("--below", type=int, required=True)
            t.add_argument("--workers", type=int, default=1)
        t.add_argument("--max-steps", type=int, default=1000)
        t.set_defaults(func=func)

    lk = sub.add_parser("lookup", help="find a term list in a corpus")
    lk.add_argument("--corpus", metavar="PATH", help="stripped file or b-file directory (default: built-in seed)")
    lk.add_argument("--query", type=_int_list, required=True)
    lk.set_defaults(func=cmd_lookup)

    o = sub.add_parser("order", help="compare two sequences in OEIS order")
    o.add_argument("--a", type=_int_list, required=True)
    o.add_argument("--b", type=_int_list, required=True)
    o.set_defaults(func=cmd_order)

    s = sub.add_parser("stones", help="stepping stones tools")
    s.add_argument("action", choices=["verify", "solve", "construct"])
    s.add_argument("--board", metavar="PATH")
    s.add_argument("-n", type=int)
    s.add_argument("--kind", choices=["linear", "chimney"], default="chimney")
    s.add_argument("--radius", type=int, default=6)
    s.add_argument("--beam", type=int)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--node-limit", type=int)
    s.add_argument("--warm", metavar="PATH", help="board document used as a starting lower bound")
    s.add_argument("--out", metavar="PATH", help="write the board document ('-' for stdout)")
    s.add_argument("--ascii", action="store_true")
    s.add_argument("--svg", metavar="PATH")
    s.set_defaults(func=cmd_stones)

    sp = sub.add_parser("spiral", help="Recaman spiral as SVG")
    sp.add_argument("--count", type=int, required=True)
    sp.add_argument("--svg", metavar="PATH", default="-")
    sp.set_defaults(func=cmd_spiral)

    i = sub.add_parser("identity", help="binomial identity check")
    i.add_argument("--n", type=int, required=True)
    i.set_defaults(func=cmd_identity)

    sg = sub.add_parser("sigmagap", help="floor(n sqrt n) - sigma(n)")
    sg.add_argument("--n", type=int, required=True)
    sg.set_defaults(func=cmd_sigmagap)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"seqforge: usage error: {exc}", file=sys.stderr)
        return 1
    except (
        DomainError,
        ValueError,
        ArithmeticError,
        OSError,
        les.SearchExhausted,
    ) as exc:
        print(f"seqforge: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
