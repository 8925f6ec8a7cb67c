"""Side-by-side values of the pencil-determinant valuation and the xi valuation.

The two functions are related but not equal in general; this only tabulates
them and counts agreements.
"""

from __future__ import annotations

import argparse
import itertools
import random

from hivekit.affgr_eval import h_function, speyer_s
from hivekit.hive import points
from hivekit.laurent import LaurentMatrix, random_laurent_matrix


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--samples", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    n = args.n

    agree = total = 0
    print("diagonal triples:")
    for exps in itertools.product(range(0, 3), repeat=3):
        gs = [LaurentMatrix.diag_t((e, 0) if n == 2 else (e,) + (0,) * (n - 1)) for e in exps]
        for ijk in points(n):
            s, h = speyer_s(*gs, ijk), h_function(gs, ijk)
            total += 1
            agree += s == h
            print(f"  exps={exps} ijk={ijk}: S={s} H={h}")
    rng = random.Random(args.seed)
    print("random triples:")
    for _ in range(args.samples):
        gs = [random_laurent_matrix(n, rng) for _ in range(3)]
        vals = [(ijk, speyer_s(*gs, ijk), h_function(gs, ijk)) for ijk in points(n)]
        for _, s, h in vals:
            total += 1
            agree += s == h
        print("  " + "  ".join(f"{ijk}:S={s},H={h}" for ijk, s, h in vals))
    print(f"agreement {agree}/{total}")


if __name__ == "__main__":
    main()
