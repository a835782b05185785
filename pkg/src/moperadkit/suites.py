"""The acceptance suites, each returning a CriterionResult with exact (zero-tolerance) verdicts."""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import chords, pab
from .config import SuiteConfig
from .freelie import witt
from .graded_lie import (LieElement, bracket, build_algebra, central_element, gamma_act, mop_compose_0,
                         mop_compose_i, relabel, tgamma_presentation)
from .solver import solve_associator, solve_cyclotomic, stabilizer_probe
from .torsors import (GRTElement, GRTGammaElement, GTElement, GTMElement, act_assoc_grt, act_cycassoc_grtgamma,
                      act_gt_on_assoc, act_gtm_on_cycassoc, grt_compose, grtgamma_compose, gt_compose,
                      gtm_compose, validate_assoc, validate_cycassoc)
from .uea import exp, f2, kernel_free, log


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        return (f"[{'PASS' if self.ok else 'FAIL'}] criterion {self.number}: {self.title} "
                f"(tolerance: exact, {self.seconds:.2f}s) {self.detail.get('summary', '')}")


def _timed(number, title, fn, *args):
    t0 = time.perf_counter()
    ok, detail = fn(*args)
    return CriterionResult(number, title, ok, detail, time.perf_counter() - t0)


# ------------------------------------------------------------- criterion 1

def presentation_suite(cfg: SuiteConfig):
    fails = []
    n = 0
    for tag in pab.PAB_TAGS + pab.PAB1_TAGS:
        n += 1
        if not pab.check_relation(tag).passed:
            fails.append(tag)
    for N in cfg.moduli:
        for tag in pab.PABGAMMA_TAGS:
            n += 1
            if not pab.check_relation(tag, N).passed:
                fails.append(f"{tag}[N={N}]")
    return not fails, {"checked": n, "failed": fails, "summary": f"{n - len(fails)}/{n} relations"}


# ------------------------------------------------------------- criterion 2

def _jacobi_exhaustive(h) -> tuple:
    """All basis pairs/triples whose degrees fit below D."""
    D = h.D
    idx = range(h.size)
    bad = 0
    count = 0
    for i, j in itertools.product(idx, idx):
        if h.degree(i) + h.degree(j) > D:
            continue
        a, b = h.basis_element(i), h.basis_element(j)
        count += 1
        if not (bracket(a, b) + bracket(b, a)).is_zero():
            bad += 1
    for i, j, k in itertools.product(idx, idx, idx):
        if h.degree(i) + h.degree(j) + h.degree(k) > D:
            continue
        a, b, c = h.basis_element(i), h.basis_element(j), h.basis_element(k)
        s = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))
        count += 1
        if not s.is_zero():
            bad += 1
    return bad, count


def lie_suite(cfg: SuiteConfig):
    problems = []
    tables = {}
    for N in cfg.moduli:
        h = build_algebra(tgamma_presentation((1, 2), N), cfg.lie_degree)
        expect = [(1 if d == 1 else 0) + witt(N + 1, d) for d in range(1, cfg.lie_degree + 1)]
        tables[N] = h.dims()
        if h.dims() != expect:
            problems.append(f"dims N={N}: {h.dims()} != {expect}")
    checked = 0
    for n in (1, 2, 3):
        for N in cfg.moduli:
            D = 4
            h = build_algebra(tgamma_presentation(tuple(range(1, n + 1)), N), D)
            c = central_element(h)
            for k in range(h.size):
                if not bracket(c, h.basis_element(k)).is_zero():
                    problems.append(f"c not central in n={n} N={N}")
                    break
            if n <= 2 or N <= 2:
                bad, cnt = _jacobi_exhaustive(h)
                checked += cnt
                if bad:
                    problems.append(f"Jacobi/antisymmetry n={n} N={N}: {bad} failures")
    return not problems, {"dims": tables, "identities_checked": checked, "problems": problems,
                          "summary": f"dims {tables}, {checked} identities"}


# ------------------------------------------------------------- criterion 3

def _probe_elements(h, D):
    """Generators decide a Lie morphism; a few brackets per degree guard the extension."""
    out = h.gens()
    for d in range(2, D + 1):
        out += [h.basis_element(k) for k in list(h.degree_range(d))[:3]]
    return out


def _cycle(names: list) -> dict:
    return {a: names[(k + 1) % len(names)] for k, a in enumerate(names)}


def moperad_suite(cfg: SuiteConfig):
    D = cfg.moperad_degree
    rng = random.Random(cfg.seed)
    problems = []
    checked = 0

    def expect(tag, a, b):
        nonlocal checked
        checked += 1
        if a != b:
            problems.append(tag)

    for N in cfg.moduli:
        for outer in ((1,), (1, 2)):
            h = build_algebra(tgamma_presentation(outer, N), D)
            els = _probe_elements(h, D)
            for i in outer:
                for J in ((10,), (10, 11)):
                    for K in ((20,), (20, 21)):
                        for x in els:
                            expect(f"square N={N} {outer} i={i} J={J} K={K}",
                                   mop_compose_0(mop_compose_i(x, i, J), K),
                                   mop_compose_i(mop_compose_0(x, K), i, J))
                    for x in els:
                        # partial compositions associate
                        y = mop_compose_i(x, i, J)
                        j = J[0]
                        L = (30, 31)
                        merged = tuple(sorted(set(J) - {j} | set(L)))
                        expect(f"assoc-i N={N} {outer} i={i} J={J}",
                               mop_compose_i(y, j, L), mop_compose_i(x, i, merged))
                        # symmetric group
                        perm = _cycle([s for s in outer if s != i] + list(J))
                        expect(f"S-equiv N={N} {outer} i={i} J={J}",
                               relabel(y, perm),
                               mop_compose_i(relabel(x, {s: perm.get(s, s) for s in outer if s != i}),
                                             i, tuple(perm[s] for s in J)))
                        # Gamma: constant shift on the inserted block, arbitrary elsewhere
                        for c in range(N):
                            gv = {s: (s * 7 + 1) % N for s in outer if s != i}
                            gv_outer = dict(gv)
                            gv_outer[i] = c
                            gv.update({s: c for s in J})
                            expect(f"Gamma-equiv-i N={N} {outer} i={i} J={J} c={c}",
                                   gamma_act(gv, y), mop_compose_i(gamma_act(gv_outer, x), i, J))
            for K in ((20,), (20, 21)):
                for x in els:
                    y = mop_compose_0(x, K)
                    expect(f"assoc-0 N={N} {outer} K={K}", mop_compose_0(y, (40,)), mop_compose_0(x, K + (40,)))
                    names = outer + K
                    shifts = list(itertools.product(range(N), repeat=len(names)))
                    if len(shifts) > 4:
                        shifts = rng.sample(shifts, 4)
                    for sh in shifts:
                        gv = dict(zip(names, sh))
                        expect(f"Gamma-equiv-0 N={N} {outer} K={K}",
                               gamma_act(gv, y), mop_compose_0(gamma_act({s: gv[s] for s in outer}, x), K))
                    perm = _cycle(list(outer) + list(K))
                    expect(f"S-equiv-0 N={N} {outer} K={K}", relabel(y, perm),
                           mop_compose_0(relabel(x, {s: perm[s] for s in outer}), tuple(perm[s] for s in K)))
    return not problems, {"checked": checked, "failed": sorted(set(problems))[:20],
                          "summary": f"{checked - len(problems)}/{checked} identities"}


# ------------------------------------------------------------- criterion 4

def cd_suite(cfg: SuiteConfig):
    fails = []
    n = 0
    for N in cfg.moduli:
        for tag in chords.CD_TAGS:
            n += 1
            r = chords.check_cd_relation(tag, N, cfg.cd_degree)
            if r["status"] != "pass":
                fails.append(r["id"])
    return not fails, {"failed": fails, "summary": f"{n - len(fails)}/{n} relations"}


# ------------------------------------------------------------- criterion 5

def solver_suite(cfg: SuiteConfig):
    r = solve_associator(1, cfg.assoc_degree)
    detail = {"assoc_ok": r.ok}
    ok = r.ok
    if r.ok:
        ell = log(r.solution.phi)
        h = ell.handle
        xy = [k for k in h.degree_range(2) if h.basis_label(k) == "[x,y]"][0]
        coef = ell.coords.get(xy, Fraction(0))
        detail["xy_coefficient"] = str(coef)
        v = validate_assoc(r.solution, cfg.assoc_degree)
        detail["assoc_certified"] = v.certified_degree
        ok = ok and abs(coef) == Fraction(1, 24) and v.ok and v.certified_degree == cfg.assoc_degree
        base = AssocBase = r.solution
        del AssocBase
        c = solve_cyclotomic(_truncate_assoc(base, cfg.cyc_degree), cfg.cyc_N, cfg.cyc_degree)
        detail["cyc_ok"] = c.ok
        if c.ok:
            vc = validate_cycassoc(c.solution, cfg.cyc_degree)
            detail["cyc_certified"] = vc.certified_degree
            ok = ok and vc.ok and vc.certified_degree == cfg.cyc_degree
        else:
            # an obstruction is acceptable output when it is reported in full
            ob = c.obstruction.to_json()
            detail["obstruction_degree"] = ob["degree"]
            ok = ok and bool(ob["rows"]) and bool(ob["inconsistent_combination"])
    detail["summary"] = (f"[x,y] coefficient {detail.get('xy_coefficient')}, assoc certified "
                         f"{detail.get('assoc_certified')}, cyclotomic N={cfg.cyc_N} certified {detail.get('cyc_certified')}")
    return ok, detail


def _truncate_assoc(t, D):
    from .torsors import AssocTuple
    return AssocTuple(t.mu, t.phi.truncate(D))


# ------------------------------------------------------------- criterion 6

def random_series(h, rng, max_degree: int = 3):
    coords = {k: Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for k in range(h.size) if h.degree(k) <= max_degree}
    return exp(LieElement(h, coords), h.D)


def random_lambda(rng):
    return Fraction(rng.choice([1, 2, 3, -1, -2, 5]), rng.choice([1, 2, 3]))


def torsor_suite(cfg: SuiteConfig):
    D, N = cfg.torsor_degree, cfg.cyc_N
    rng = random.Random(cfg.seed)
    t = _truncate_assoc(solve_associator(1, D).solution, D)
    ct = solve_cyclotomic(t, N, D).solution
    counts = {}
    bad = []

    def tally(name, ok):
        counts[name] = counts.get(name, 0) + 1
        if not ok:
            bad.append(name)

    tally("identity-gt", act_gt_on_assoc(GTElement.identity(D), t) == t)
    tally("identity-grt", act_assoc_grt(t, GRTElement.identity(D)) == t)
    tally("identity-gtm", act_gtm_on_cycassoc(GTMElement.identity(N, D), ct) == ct)
    tally("identity-grtgamma", act_cycassoc_grtgamma(ct, GRTGammaElement.identity(N, D)) == ct)

    def gt():
        return GTElement(random_lambda(rng), random_series(f2(D), rng))

    def grt():
        return GRTElement(random_lambda(rng), random_series(f2(D), rng))

    def gtm():
        return GTMElement(gt(), random_series(kernel_free(N, D), rng), N)

    def grtg():
        return GRTGammaElement(random_lambda(rng), random_series(f2(D), rng), random_series(kernel_free(N, D), rng), N)

    for _ in range(cfg.samples):
        a, b = gt(), gt()
        tally("left-gt", act_gt_on_assoc(gt_compose(a, b), t) == act_gt_on_assoc(a, act_gt_on_assoc(b, t)))
        p, q = grt(), grt()
        tally("right-grt", act_assoc_grt(t, grt_compose(p, q)) == act_assoc_grt(act_assoc_grt(t, p), q))
        tally("commute-classical", act_assoc_grt(act_gt_on_assoc(a, t), p) == act_gt_on_assoc(a, act_assoc_grt(t, p)))
        A, B = gtm(), gtm()
        tally("left-gtm", act_gtm_on_cycassoc(gtm_compose(A, B), ct)
              == act_gtm_on_cycassoc(A, act_gtm_on_cycassoc(B, ct)))
        P, Q = grtg(), grtg()
        tally("right-grtgamma", act_cycassoc_grtgamma(ct, grtgamma_compose(P, Q))
              == act_cycassoc_grtgamma(act_cycassoc_grtgamma(ct, P), Q))
        tally("commute-cyclotomic", act_cycassoc_grtgamma(act_gtm_on_cycassoc(A, ct), P)
              == act_gtm_on_cycassoc(A, act_cycassoc_grtgamma(ct, P)))
    probes = {**stabilizer_probe(t), **stabilizer_probe(ct)}
    for name, pr in probes.items():
        tally(f"free-{name}", pr["solved"] and pr["unique"] and pr["trivial"])
    return not bad, {"counts": counts, "failed": sorted(set(bad)),
                     "summary": f"{sum(counts.values()) - len(bad)}/{sum(counts.values())} checks, "
                                f"{cfg.samples} samples per law"}


# ------------------------------------------------------------- criterion 7

def crosscheck_suite(cfg: SuiteConfig, per_case: int = 60):
    rng = random.Random(cfg.seed)
    bad = []
    n_checked = 0
    for N in cfg.moduli:
        for n in (1, 2, 3):
            for _ in range(per_case):
                w = pab.random_endomorphism(n, N, cfg.word_length, rng)
                n_checked += 1
                if pab.gamma_weight(w, N) != pab.linking_weight(w, N):
                    bad.append(str(w))
    return not bad, {"checked": n_checked, "failed": bad[:10], "summary": f"{n_checked - len(bad)}/{n_checked} words"}


# ---------------------------------------------------------------------- all

CRITERIA = (
    (1, "presentation suites under braid evaluation", presentation_suite),
    (2, "Lie structure of t^Gamma", lie_suite),
    (3, "moperad axioms on t^Gamma", moperad_suite),
    (4, "CD^Gamma relations among K, L, b, X, H", cd_suite),
    (5, "associator and cyclotomic solver", solver_suite),
    (6, "torsor laws, commuting actions, freeness", torsor_suite),
    (7, "gamma weight equals linking with the frozen strand", crosscheck_suite),
)

NOT_REPRODUCIBLE = (8, "analytic KZ / cyclotomic KZ associators and the full isomorphism statements")


def run_criterion(number: int, cfg: SuiteConfig | None = None) -> CriterionResult:
    cfg = cfg or SuiteConfig()
    for num, title, fn in CRITERIA:
        if num == number:
            return _timed(num, title, fn, cfg)
    raise ValueError(f"no criterion {number}")
