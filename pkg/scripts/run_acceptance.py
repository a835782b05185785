"""Run the acceptance suites and write a JSON summary.

    python scripts/run_acceptance.py --out results/acceptance.json --samples 40
"""
import argparse
import dataclasses
import json
import os

from moperadkit.config import SuiteConfig
from moperadkit.suites import CRITERIA, NOT_REPRODUCIBLE, run_criterion


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--only", type=int, action="append", help="criterion number (repeatable)")
    ap.add_argument("--samples", type=int, default=SuiteConfig.samples)
    ap.add_argument("--seed", type=int, default=SuiteConfig.seed)
    ap.add_argument("--out")
    args = ap.parse_args()
    cfg = dataclasses.replace(SuiteConfig(), samples=args.samples, seed=args.seed)
    wanted = args.only or [c[0] for c in CRITERIA]
    results = []
    for num in wanted:
        r = run_criterion(num, cfg)
        print(r.line(), flush=True)
        results.append({"criterion": r.number, "title": r.title, "ok": r.ok, "seconds": round(r.seconds, 3),
                        "detail": r.detail})
    print(f"[NOT REPRODUCIBLE] criterion {NOT_REPRODUCIBLE[0]}: {NOT_REPRODUCIBLE[1]}")
    if args.out:
        os.makedirs(os.path.dirname(args.out) or ".", exist_ok=True)
        with open(args.out, "w") as fh:
            json.dump({"config": cfg.to_json(), "results": results}, fh, indent=1, default=str)
    raise SystemExit(0 if all(r["ok"] for r in results) else 1)


if __name__ == "__main__":
    main()
