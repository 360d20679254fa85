"""Cross-check the graph, cascade and matrix indices over ranges of n.

    python scripts/verify_oracles.py --max-n 5 --matrix-max-n 4 --out verify.json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from meander.cli import DEFAULT_SEED, VerifyConfig, verify_pairs


@dataclass
class Experiment:
    types: tuple[str, ...] = ("A", "B", "C", "D")
    max_n: int = 5
    matrix_max_n: int = 4
    seed: int = DEFAULT_SEED
    trials: int = 5


def run(exp: Experiment) -> list[dict]:
    rows = []
    for t in exp.types:
        for n in range(2 if t == "A" else 1, exp.max_n + 1):
            oracles = ["graph"]
            if t in "AD":
                oracles.append("tyj")
            if n <= exp.matrix_max_n:
                oracles.append("matrix")
            if len(oracles) < 2:
                continue
            t0 = time.perf_counter()
            rep = verify_pairs(VerifyConfig(n, t, tuple(oracles), seed=exp.seed, trials=exp.trials))
            rows.append({"type": t, "n": n, "oracles": oracles, "pairs": rep.pairs,
                         "mismatches": rep.mismatches, "seconds": round(time.perf_counter() - t0, 3)})
            print(f"{t}{n}: {rep.pairs:6d} pairs  {','.join(oracles):<16} "
                  f"mismatches {rep.mismatches}  {rows[-1]['seconds']}s", flush=True)
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--matrix-max-n", type=int, default=4)
    p.add_argument("--types", default="A,B,C,D")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out")
    a = p.parse_args()
    exp = Experiment(tuple(a.types.split(",")), a.max_n, a.matrix_max_n, a.seed)
    rows = run(exp)
    if a.out:
        with open(a.out, "w") as fh:
            json.dump({"config": asdict(exp), "results": rows}, fh, indent=2)
    raise SystemExit(1 if any(r["mismatches"] for r in rows) else 0)


if __name__ == "__main__":
    main()
