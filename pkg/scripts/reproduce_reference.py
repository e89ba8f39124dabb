"""Recompute the four reference weight distributions by every available route.

    python3 scripts/reproduce_reference.py [--workers N] [--json]
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from wdist import build_field, predicted_distribution, weight_distribution
from wdist.codes import direct_allowed, minimum_distance, weight_enumerator
from wdist.structure import make_spec


@dataclass(frozen=True)
class ReferenceConfig:
    name: str
    p: int
    m: int
    t: int


REFERENCE = (
    ReferenceConfig("C(3,6,2)", 3, 6, 2),
    ReferenceConfig("C(3,4,2)", 3, 4, 2),
    ReferenceConfig("C(5,3,3)", 5, 3, 3),
    ReferenceConfig("C(3,6,5)", 3, 6, 5),
)


def reproduce(cfg: ReferenceConfig, workers: int | None):
    ctx = build_field(cfg.p, cfg.m)
    spec = make_spec(cfg.p, cfg.m, cfg.t)
    predicted = predicted_distribution(cfg.p, cfg.m, spec.k)
    row = dict(asdict(cfg), k=spec.k, case=spec.case_tag.value, predicted=weight_enumerator(predicted))
    methods = ["fast"] + (["direct"] if direct_allowed(ctx) else [])
    for method in methods:
        start = time.perf_counter()
        dist = weight_distribution(ctx, cfg.t, method=method, workers=workers)
        row[f"{method}_seconds"] = round(time.perf_counter() - start, 4)
        row[f"{method}_matches"] = dist == predicted
    row["parameters"] = f"[{ctx.n},{predicted.dimension},{minimum_distance(predicted)}]"
    return row


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--workers", type=int, default=None)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = [reproduce(cfg, args.workers) for cfg in REFERENCE]
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    for r in rows:
        status = "ok" if all(v for k, v in r.items() if k.endswith("_matches")) else "MISMATCH"
        timing = " ".join(f"{k[:-8]}={r[k]}s" for k in r if k.endswith("_seconds"))
        print(f"{r['name']}: (p,m,t)=({r['p']},{r['m']},{r['t']}) k={r['k']} {r['case']} {r['parameters']} {status} {timing}")
        print(f"    {r['predicted']}")


if __name__ == "__main__":
    main()
