"""Generate Gijswijt's sequence and report where each value first appears."""

from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from seqforge.curling import gijswijt


@dataclass
class Config:
    count: int = 3 * 10**5


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--count", type=int, default=Config.count)
    cfg = Config(**vars(p.parse_args()))

    t0 = time.perf_counter()
    g = gijswijt(cfg.count)
    print(f"terms={cfg.count} time={time.perf_counter() - t0:.1f}s")
    counts = Counter(g)
    for v in sorted(counts):
        print(f"value {v}: first at term {g.index(v) + 1}, occurrences {counts[v]}")


if __name__ == "__main__":
    main()
