"""Smallest values not yet reached by Recaman's sequence after N steps."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from seqforge.recaman import RecamanState


@dataclass
class Config:
    steps: int = 10**7
    bound: int = 10**6
    show: int = 20


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--steps", type=int, default=Config.steps)
    p.add_argument("--bound", type=int, default=Config.bound)
    p.add_argument("--show", type=int, default=Config.show)
    cfg = Config(**vars(p.parse_args()))

    t0 = time.perf_counter()
    state = RecamanState.for_steps(cfg.steps)
    state.advance(cfg.steps - 1)
    missing = state.missing_below(cfg.bound)
    print(f"steps={cfg.steps} time={time.perf_counter() - t0:.2f}s")
    print(f"missing below {cfg.bound}: {len(missing)}")
    print("smallest:", ",".join(map(str, missing[: cfg.show])))


if __name__ == "__main__":
    main()
