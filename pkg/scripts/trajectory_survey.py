"""Classify every start below a bound under the aliquot or sigma/phi mean map."""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from seqforge.trajectories import MapKind, classify_range


@dataclass
class Config:
    map: str = "aliquot"
    below: int = 1000
    max_steps: int = 500
    workers: int = 1


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--map", choices=[k.value for k in MapKind], default=Config.map)
    p.add_argument("--below", type=int, default=Config.below)
    p.add_argument("--max-steps", dest="max_steps", type=int, default=Config.max_steps)
    p.add_argument("--workers", type=int, default=Config.workers)
    cfg = Config(**vars(p.parse_args()))

    reports = classify_range(MapKind(cfg.map), cfg.below, cfg.max_steps, cfg.workers)
    tally = Counter(r.outcome_label() for r in reports.values())
    for label, count in sorted(tally.items()):
        print(f"{label}: {count}")
    open_starts = [n for n, r in reports.items() if not r.terminal]
    print("unresolved:", ",".join(map(str, open_starts[:30])) or "none")


if __name__ == "__main__":
    main()
