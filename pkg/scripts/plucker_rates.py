"""How often the valuation table of a random Laurent matrix satisfies the
tropical Plucker relations, across seeds and coefficient ranges."""

from __future__ import annotations

import argparse
import json

from hivekit.affgr_eval import plucker_sweep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seeds", type=int, default=5)
    args = ap.parse_args()

    rows = []
    for coeffs in [(-1, 1), (-3, 3), (-9, 9)]:
        for exps in [(0, 0), (-1, 2)]:
            for seed in range(args.seeds):
                rep = plucker_sweep(args.n, args.count, seed, exps=exps, coeffs=coeffs)
                rows.append({"coeffs": coeffs, "exps": exps, "seed": seed,
                             "instances": rep.instances, "rate": round(rep.rate, 4)})
                print(f"coeffs={coeffs} exps={exps} seed={seed}: {rep.holding}/{rep.instances} ({rep.rate:.2%})")
    print(json.dumps(rows))


if __name__ == "__main__":
    main()
