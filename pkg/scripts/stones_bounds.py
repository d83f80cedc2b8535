"""Table of stepping-stones lower bounds: constructions and solver output."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from seqforge.stones import SearchConfig, chimney_construction, linear_construction, solve


@dataclass
class Config:
    max_n: int = 8
    beam: int = 16
    exhaustive_radius: int = 3


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", dest="max_n", type=int, default=Config.max_n)
    p.add_argument("--beam", type=int, default=Config.beam)
    p.add_argument("--radius", dest="exhaustive_radius", type=int, default=Config.exhaustive_radius)
    cfg = Config(**vars(p.parse_args()))

    print("n  linear  chimney  solver  exhaustive  seconds")
    for n in range(1, cfg.max_n + 1):
        lin = linear_construction(n).max_label if n >= 3 else None
        chim = chimney_construction(n).max_label if n >= 3 else None
        t0 = time.perf_counter()
        if n <= 3:
            res = solve(n, SearchConfig(radius=cfg.exhaustive_radius))
        else:
            res = solve(n, SearchConfig(beam=cfg.beam, warm_start=chimney_construction(n)))
        took = time.perf_counter() - t0
        print(f"{n:<2} {lin or '-':>6}  {chim or '-':>7}  {res.best:>6}  {str(res.exhaustive):>10}  {took:7.2f}")


if __name__ == "__main__":
    main()
