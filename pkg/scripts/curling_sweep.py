"""Check the curling number conjecture on every short start over an alphabet."""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from seqforge.curling import conjecture_sweep


@dataclass
class Config:
    alphabet: list[int] = field(default_factory=lambda: [2, 3])
    max_len: int = 14
    cap: int = 10**4


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--alphabet", type=lambda s: [int(x) for x in s.split(",")], default=[2, 3])
    p.add_argument("--max-len", dest="max_len", type=int, default=Config.max_len)
    p.add_argument("--cap", type=int, default=Config.cap)
    cfg = Config(**vars(p.parse_args()))

    summary = conjecture_sweep(cfg.alphabet, cfg.max_len, cfg.cap)
    print(f"starts={summary['starts']} failures={len(summary['failures'])}")
    print(f"longest tail {summary['longest_tail']} from {list(summary['longest_start'])}")
    for start in summary["failures"][:10]:
        print("no 1 within cap:", list(start))


if __name__ == "__main__":
    main()
