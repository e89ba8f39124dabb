"""Verify the closed-form tables against enumeration for every matched t in small fields.

    python3 scripts/sweep_verify.py --fields 3,2 3,3 3,4 5,3 --max-order 2401
"""

import argparse
from collections import Counter
from dataclasses import dataclass, field

from wdist import build_field
from wdist.errors import TooLarge
from wdist.predict import verify
from wdist.structure import admissibility_witness, match_exponent


@dataclass
class SweepConfig:
    fields: list = field(default_factory=lambda: [(3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2), (3, 5)])
    max_order: int = 3**6
    workers: int | None = None


def sweep(cfg: SweepConfig):
    for p, m in cfg.fields:
        if p**m > cfg.max_order:
            print(f"({p},{m}): skipped, p^m > {cfg.max_order}")
            continue
        ctx = build_field(p, m)
        tally = Counter()
        for t in range(1, ctx.n):
            if admissibility_witness(p, m, t) is not None:
                tally["inadmissible"] += 1
            elif match_exponent(p, m, t) is None:
                tally["unmatched"] += 1
            else:
                try:
                    tally[verify(ctx, t, workers=cfg.workers).status] += 1
                except TooLarge:
                    tally["too large"] += 1
        print(f"({p},{m}): " + ", ".join(f"{k}={v}" for k, v in sorted(tally.items())))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--fields", nargs="*", help="p,m pairs")
    ap.add_argument("--max-order", type=int, default=SweepConfig.max_order)
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()
    cfg = SweepConfig(max_order=args.max_order, workers=args.workers)
    if args.fields:
        cfg.fields = [tuple(int(x) for x in f.split(",")) for f in args.fields]
    sweep(cfg)


if __name__ == "__main__":
    main()
