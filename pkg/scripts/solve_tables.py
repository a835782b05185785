"""Per-degree solver tables: equations, unknowns, rank and nullity at each degree.

    python scripts/solve_tables.py --degree 4 --moduli 1 2 3 --cyc-degree 3
"""
import argparse
import time
from fractions import Fraction

from moperadkit.config import SolveConfig
from moperadkit.solver import solve_associator, solve_cyclotomic
from moperadkit.torsors import AssocTuple


def table(title, report, seconds):
    print(f"\n{title}  ok={report.ok} certified={report.certified_degree} ({seconds:.2f}s)")
    print(f"{'deg':>3} {'eqs':>6} {'unk':>5} {'rank':>5} {'null':>5}")
    for s in report.steps:
        print(f"{s.degree:>3} {s.n_equations:>6} {s.n_unknowns:>5} {s.rank:>5} {s.nullity:>5}")
    if report.obstruction is not None:
        print(f"obstruction at degree {report.obstruction.degree}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--mu", default="1")
    ap.add_argument("--degree", type=int, default=4)
    ap.add_argument("--moduli", type=int, nargs="*", default=[1, 2, 3])
    ap.add_argument("--cyc-degree", type=int, default=3)
    ap.add_argument("--seed", type=int, default=None)
    args = ap.parse_args()
    cfg = SolveConfig(Fraction(args.mu), args.degree, None, args.seed)
    t0 = time.perf_counter()
    r = solve_associator(cfg.mu, cfg.degree, cfg.free_choice())
    table(f"associator mu={cfg.mu} D={cfg.degree}", r, time.perf_counter() - t0)
    if not r.ok:
        return
    base = AssocTuple(r.solution.mu, r.solution.phi.truncate(args.cyc_degree))
    for N in args.moduli:
        c = SolveConfig(cfg.mu, args.cyc_degree, N, args.seed)
        t0 = time.perf_counter()
        rc = solve_cyclotomic(base, N, c.degree, c.free_choice())
        table(f"cyclotomic N={N} D={c.degree}", rc, time.perf_counter() - t0)


if __name__ == "__main__":
    main()
