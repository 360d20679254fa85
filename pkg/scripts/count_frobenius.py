"""Count Frobenius seaweeds of so_2n by crossing flag, and distinct seaweeds."""

import argparse
from collections import Counter
from dataclasses import dataclass

from meander.frobenius import distinct_spec_count, enumerate_records


@dataclass
class CountConfig:
    max_n: int = 7
    workers: int = 1
    dedup: bool = True


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-dedup", action="store_true")
    a = p.parse_args()
    cfg = CountConfig(a.max_n, a.workers, not a.no_dedup)
    print("n  pairs     frobenius  with_crossing  index_histogram" + ("  distinct" if cfg.dedup else ""))
    for n in range(1, cfg.max_n + 1):
        hist, frob, cross = Counter(), 0, 0
        for r in enumerate_records(n, workers=cfg.workers):
            hist[r.index] += 1
            frob += r.frobenius
            cross += r.frobenius and r.crossing
        line = f"{n:<2} {4 ** n:<9} {frob:<10} {cross:<14} {dict(sorted(hist.items()))}"
        if cfg.dedup:
            line += f"  {distinct_spec_count(n)}"
        print(line, flush=True)


if __name__ == "__main__":
    main()
