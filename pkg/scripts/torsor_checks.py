"""Sample the torsor laws with many seeds, and compare the two GT composition laws.

    python scripts/torsor_checks.py --samples 50 --seed 1
"""
import argparse
import dataclasses
import random

from moperadkit.config import SuiteConfig
from moperadkit.solver import solve_associator
from moperadkit.suites import random_lambda, random_series, torsor_suite
from moperadkit.torsors import AssocTuple, GTElement, act_gt_on_assoc, gt_compose
from moperadkit.uea import f2


def compare_gt_laws(t, samples, seed):
    rng = random.Random(seed)
    D = t.D
    score = {"standard": [0, 0], "conjugated": [0, 0]}  # [compatible, associative]
    for _ in range(samples):
        a, b, c = (GTElement(random_lambda(rng), random_series(f2(D), rng)) for _ in range(3))
        for law in score:
            comp = act_gt_on_assoc(gt_compose(a, b, law), t) == act_gt_on_assoc(a, act_gt_on_assoc(b, t))
            assoc = gt_compose(gt_compose(a, b, law), c, law) == gt_compose(a, gt_compose(b, c, law), law)
            score[law][0] += comp
            score[law][1] += assoc
    for law, (comp, assoc) in score.items():
        print(f"GT law {law:10s}: compatible {comp}/{samples}, associative {assoc}/{samples}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--N", type=int, default=2)
    ap.add_argument("--degree", type=int, default=3)
    args = ap.parse_args()
    cfg = dataclasses.replace(SuiteConfig(), samples=args.samples, seed=args.seed, cyc_N=args.N,
                              torsor_degree=args.degree)
    ok, detail = torsor_suite(cfg)
    for name, n in sorted(detail["counts"].items()):
        print(f"{name:22s} {n:4d} {'FAIL' if name in detail['failed'] else 'ok'}")
    print("all ok" if ok else f"failures: {detail['failed']}")
    t = AssocTuple(1, solve_associator(1, args.degree).solution.phi)
    compare_gt_laws(t, min(args.samples, 10), args.seed)


if __name__ == "__main__":
    main()
