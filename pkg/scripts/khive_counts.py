"""Count 4-hives against the invariant-dimension oracle on a wider GL_3 range."""

from __future__ import annotations

import argparse
import itertools
import time

from hivekit import weights as W
from hivekit.khive import enumerate_khives
from hivekit.lr_oracle import multi_invariant_dim


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--bound", type=int, default=2)
    ap.add_argument("--limit", type=int, default=300, help="stop after this many zero-sum quadruples")
    args = ap.parse_args()

    ws = W.dominant_coweights(args.n, -args.bound, args.bound)
    done = mismatches = 0
    largest = (0, None)
    t = time.perf_counter()
    for q in itertools.product(ws, repeat=4):
        if sum(map(sum, q)) != 0:
            continue
        got, want = len(enumerate_khives(*q)), multi_invariant_dim(*q)
        done += 1
        if got != want:
            mismatches += 1
            print("MISMATCH", q, got, want)
        largest = max(largest, (got, q), key=lambda x: x[0])
        if done >= args.limit:
            break
    print(f"{done} quadruples, {mismatches} mismatches, largest count {largest[0]} at {largest[1]}, "
          f"{time.perf_counter() - t:.1f}s")


if __name__ == "__main__":
    main()
