"""Run every acceptance criterion at full scale and write the JSON report."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from hivekit.sweep import SweepConfig, sweep_verify_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=20260415)
    ap.add_argument("--out", type=Path, default=Path("results/acceptance.json"))
    args = ap.parse_args()

    cfg = SweepConfig(seed=args.seed)
    rep = sweep_verify_all(config=cfg, progress=lambda r: print(f"{r.line()} ({r.elapsed:.1f}s)", flush=True))
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(rep.to_json(), indent=1))
    print(f"report written to {args.out}")
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
