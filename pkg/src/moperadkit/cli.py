"""Batch front-end with machine-readable reports.

Exit codes: 0 when every check passes, 1 when any check fails or errors,
2 on usage errors (argparse).
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import chords, pab
from .config import SolveConfig
from .graded_lie import build_algebra, free_presentation, t_presentation, tgamma_presentation
from .solver import solve_associator, solve_cyclotomic
from .torsors import (SCHEMA, AssocTuple, CycAssocTuple, GRTElement, GRTGammaElement, GTElement, GTMElement,
                      act_assoc_grt, act_cycassoc_grtgamma, act_gt_on_assoc, act_gtm_on_cycassoc,
                      element_from_json, element_to_json, grt_compose, grtgamma_compose, gt_compose,
                      gtm_compose, validate_assoc, validate_cycassoc, validate_grt, validate_grtgamma,
                      validate_gt, validate_gtm)


class Report:
    def __init__(self, argv):
        self.command = list(argv)
        self.checks: list = []
        self.data: dict = {}

    def add(self, id_, ok, details=None, timing=0.0, status=None):
        self.checks.append({"id": id_, "status": status or ("pass" if ok else "fail"),
                            "details": details or {}, "timing": round(timing, 4)})

    def summary(self) -> dict:
        out = {"pass": 0, "fail": 0, "error": 0}
        for c in self.checks:
            out[c["status"]] += 1
        return out

    @property
    def exit_code(self) -> int:
        return 0 if all(c["status"] == "pass" for c in self.checks) else 1

    def to_json(self) -> dict:
        return {"schema": SCHEMA, "command": self.command, "checks": self.checks,
                "summary": self.summary(), "data": self.data}

    def text(self) -> str:
        lines = [f"{c['status'].upper():5s} {c['id']}  ({c['timing']:.3f}s)" for c in self.checks]
        for k, v in self.data.items():
            lines.append(f"{k}: {json.dumps(v) if not isinstance(v, str) else v}")
        s = self.summary()
        lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['error']} errors")
        return "\n".join(lines)


def _load(path):
    with open(path) as fh:
        return json.load(fh)


def _dump(obj, path):
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=1)


# ------------------------------------------------------------------ commands

def cmd_verify(args, rep: Report):
    if args.target == "presentation":
        which = ("pab", "pab1", "pabgamma") if args.which == "all" else (args.which,)
        moduli = [1] if args.N is None else [args.N]
        for w in which:
            Ns = moduli if w == "pabgamma" else [1]
            for N in Ns:
                for tag in pab.suite_tags(w):
                    t0 = time.perf_counter()
                    r = pab.check_relation(tag, N)
                    rep.add(r.to_json()["id"], r.passed, {"sides": r.details}, time.perf_counter() - t0)
    else:
        moduli = [1, 2, 3] if args.N is None else [args.N]
        for N in moduli:
            for tag in chords.CD_TAGS:
                t0 = time.perf_counter()
                r = chords.check_cd_relation(tag, N, args.degree)
                rep.add(r["id"], r["status"] == "pass", r["details"], time.perf_counter() - t0)


def cmd_lie(args, rep: Report):
    if args.algebra == "tgamma":
        pres = tgamma_presentation(tuple(range(1, args.n + 1)), args.N)
    elif args.algebra == "t":
        pres = t_presentation(tuple(range(1, args.n + 1)))
    else:
        pres = free_presentation(tuple(args.generators.split(",")))
    t0 = time.perf_counter()
    h = build_algebra(pres, args.degree)
    rep.data["algebra"] = pres.ident
    rep.data["dims"] = h.dims()
    if args.list:
        rep.data["basis"] = {d: [h.basis_label(k) for k in h.degree_range(d)] for d in range(1, args.degree + 1)}
    rep.add("lie-basis", True, {"dims": h.dims()}, time.perf_counter() - t0)


def cmd_solve(args, rep: Report):
    cfg = SolveConfig(Fraction(args.mu), args.degree, getattr(args, "N", None), args.seed)
    t0 = time.perf_counter()
    if args.what == "associator":
        r = solve_associator(cfg.mu, cfg.degree, cfg.free_choice())
    else:
        base = element_from_json(_load(args.base))
        if isinstance(base, CycAssocTuple):
            base = base.base
        if not isinstance(base, AssocTuple):
            raise SystemExit("--base must hold an associator")
        r = solve_cyclotomic(base, cfg.N, cfg.degree, cfg.free_choice())
    elapsed = time.perf_counter() - t0
    out = r.to_json()
    details = {"certified_degree": r.certified_degree, "steps": out["steps"]}
    if r.obstruction is not None:
        details["obstruction"] = out["obstruction"]
    rep.add(f"solve-{args.what}", r.ok, details, elapsed)
    if r.ok:
        val = validate_assoc(r.solution) if args.what == "associator" else validate_cycassoc(r.solution)
        rep.add("revalidate", val.ok and val.certified_degree == r.certified_degree, val.to_json())
    if args.out and r.solution is not None:
        _dump(element_to_json(r.solution, r.certified_degree), args.out)
        rep.data["written"] = args.out


def _validate(e, reference=None):
    if isinstance(e, AssocTuple):
        return validate_assoc(e)
    if isinstance(e, CycAssocTuple):
        return validate_cycassoc(e)
    if isinstance(e, GRTElement):
        return validate_grt(e)
    if isinstance(e, GRTGammaElement):
        return validate_grtgamma(e)
    if isinstance(e, GTElement):
        return validate_gt(e, reference=reference.base if isinstance(reference, CycAssocTuple) else reference)
    if isinstance(e, GTMElement):
        return validate_gtm(e, reference=reference)
    raise TypeError(type(e).__name__)


_KINDS = {"assoc": AssocTuple, "cycassoc": CycAssocTuple, "gt": GTElement, "gtm": GTMElement,
          "grt": GRTElement, "grtgamma": GRTGammaElement}


def cmd_torsor(args, rep: Report):
    elems = [element_from_json(_load(p)) for p in args.inputs]
    t0 = time.perf_counter()
    if args.op == "validate":
        if len(elems) != 1:
            raise SystemExit("torsor validate takes exactly one --in")
        e = elems[0]
        if args.kind and not isinstance(e, _KINDS[args.kind]):
            raise SystemExit(f"--kind {args.kind} does not match the file ({type(e).__name__})")
        ref = element_from_json(_load(args.reference)) if args.reference else None
        v = _validate(e, ref)
        for c in v.checks:
            rep.add(f"{v.kind}.{c['equation']}", c["status"] == "pass", c, status=c["status"])
        rep.data["certified_degree"] = v.certified_degree
        rep.checks[-1]["timing"] = round(time.perf_counter() - t0, 4)
        return
    if len(elems) != 2:
        raise SystemExit(f"torsor {args.op} takes exactly two --in")
    a, b = elems
    if args.op == "compose":
        table = {GTElement: gt_compose, GTMElement: gtm_compose, GRTElement: grt_compose,
                 GRTGammaElement: grtgamma_compose}
        if type(a) is not type(b) or type(a) not in table:
            raise SystemExit("compose needs two group elements of the same kind")
        res = table[type(a)](a, b)
    else:
        if isinstance(a, GTElement) and isinstance(b, AssocTuple):
            res = act_gt_on_assoc(a, b)
        elif isinstance(a, GTMElement) and isinstance(b, CycAssocTuple):
            res = act_gtm_on_cycassoc(a, b)
        elif isinstance(a, AssocTuple) and isinstance(b, GRTElement):
            res = act_assoc_grt(a, b)
        elif isinstance(a, CycAssocTuple) and isinstance(b, GRTGammaElement):
            res = act_cycassoc_grtgamma(a, b)
        else:
            raise SystemExit("act takes (group, associator) for left or (associator, group) for right actions")
    elapsed = time.perf_counter() - t0
    rep.data["result"] = element_to_json(res)
    if isinstance(res, (AssocTuple, CycAssocTuple)):
        v = _validate(res)
        rep.add(f"torsor-{args.op}", v.ok, v.to_json(), elapsed)
    else:
        rep.add(f"torsor-{args.op}", True, {}, elapsed)
    if args.out:
        _dump(rep.data["result"], args.out)


# -------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="moperadkit", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--seed", type=int, default=None, help="seed for randomized choices")
    sub = p.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("verify")
    vs = v.add_subparsers(dest="target", required=True)
    vp = vs.add_parser("presentation")
    vp.add_argument("--which", choices=("pab", "pab1", "pabgamma", "all"), default="all")
    vp.add_argument("--N", type=int, default=None)
    vc = vs.add_parser("cdgamma")
    vc.add_argument("--N", type=int, default=None)
    vc.add_argument("--degree", type=int, default=3)

    lie = sub.add_parser("lie")
    ls = lie.add_subparsers(dest="what", required=True)
    lb = ls.add_parser("basis")
    lb.add_argument("--algebra", choices=("tgamma", "t", "free"), required=True)
    lb.add_argument("--n", type=int, default=2)
    lb.add_argument("--N", type=int, default=1)
    lb.add_argument("--degree", type=int, required=True)
    lb.add_argument("--generators", default="x,y")
    lb.add_argument("--list", action="store_true", help="also list the basis brackets")

    s = sub.add_parser("solve")
    ss = s.add_subparsers(dest="what", required=True)
    sa = ss.add_parser("associator")
    sa.add_argument("--mu", default="1")
    sa.add_argument("--degree", type=int, default=4)
    sa.add_argument("--out")
    sc = ss.add_parser("cyclotomic")
    sc.add_argument("--N", type=int, required=True)
    sc.add_argument("--degree", type=int, default=3)
    sc.add_argument("--base", required=True)
    sc.add_argument("--mu", default="1", help=argparse.SUPPRESS)
    sc.add_argument("--out")

    t = sub.add_parser("torsor")
    ts = t.add_subparsers(dest="op", required=True)
    for op in ("compose", "act", "validate"):
        q = ts.add_parser(op)
        q.add_argument("--in", dest="inputs", action="append", required=True)
        q.add_argument("--out")
        if op == "validate":
            q.add_argument("--kind", choices=tuple(_KINDS))
            q.add_argument("--reference", help="reference (cyclotomic) associator for indirect checks")
    return p


def run(argv=None) -> tuple:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    rep = Report(argv)
    handler = {"verify": cmd_verify, "lie": cmd_lie, "solve": cmd_solve, "torsor": cmd_torsor}[args.cmd]
    handler(args, rep)
    return rep, rep.exit_code


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        rep, code = run(argv)
    except SystemExit as e:
        if isinstance(e.code, str):
            print(f"error: {e.code}", file=sys.stderr)
            return 2
        return e.code if isinstance(e.code, int) else 2
    as_json = "--json" in argv
    print(json.dumps(rep.to_json(), indent=1) if as_json else rep.text())
    return code
