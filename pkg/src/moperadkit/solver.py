"""Degree-by-degree construction of truncated (cyclotomic) associators.

The unknown is a Lie series ell = sum_d ell_d. Once ell_{<d} is fixed, the
degree-d part of every defining equation is affine in ell_d, so each degree
is one exact linear solve. The same loop also solves for group elements that
move one associator to another (transport), which gives the freeness probe.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .graded_lie import LieElement
from .linalg import solve_affine
from .torsors import (AssocTuple, CycAssocTuple, GRTElement, GRTGammaElement, GTElement, GTMElement,
                      act_assoc_grt, act_cycassoc_grtgamma, act_gt_on_assoc, act_gtm_on_cycassoc,
                      assoc_equations, cyc_equations, element_to_json, validate_assoc, validate_cycassoc)
from .uea import GroupLikeElement, exp, f2, kernel_free


@dataclass
class DegreeStep:
    degree: int
    n_equations: int
    n_unknowns: int
    rank: int
    nullity: int
    representative: list  # [[basis label, "n/d"], ...]

    def to_json(self) -> dict:
        return dict(self.__dict__)


@dataclass
class Obstruction:
    degree: int
    unknowns: list
    rows: list  # [[equation key, {unknown: coef}, rhs], ...]
    inconsistent_combination: dict

    def to_json(self) -> dict:
        q = lambda x: f"{Fraction(x).numerator}/{Fraction(x).denominator}"
        return {"degree": self.degree, "unknowns": self.unknowns,
                "rows": [[k, {str(j): q(c) for j, c in r.items()}, q(b)] for k, r, b in self.rows],
                "inconsistent_combination": {str(k): q(v) for k, v in self.inconsistent_combination.items()}}


@dataclass
class SolveReport:
    kind: str
    target_degree: int
    certified_degree: int
    solution: object
    steps: list = field(default_factory=list)
    obstruction: Obstruction | None = None

    @property
    def ok(self) -> bool:
        return self.obstruction is None and self.certified_degree == self.target_degree

    def to_json(self) -> dict:
        return {"kind": self.kind, "target_degree": self.target_degree,
                "certified_degree": self.certified_degree, "ok": self.ok,
                "steps": [s.to_json() for s in self.steps],
                "obstruction": None if self.obstruction is None else self.obstruction.to_json(),
                "solution": None if self.solution is None else element_to_json(self.solution, self.certified_degree)}


def _residual_vector(eqs: list, d: int) -> dict:
    out = {}
    for name, lhs, rhs in eqs:
        diff = lhs - rhs
        for m, c in diff.degree_coords(d).items():
            out[(name, m)] = c
    return out


def solve_by_degree(handle, residual: Callable, D: int, start: LieElement | None = None,
                    first_degree: int = 1, free_choice: Callable | None = None) -> tuple:
    """Solve residual(ell, d) = 0 for d = first_degree..D.

    residual(ell, d) returns the degree-d part of the equations as
    {key: value}; it must be affine in the degree-d coordinates of ell.
    free_choice(d, free_indices) may return {index: value} to pin free
    coordinates (default: all zero). Returns (ell, steps, obstruction).
    """
    ell = start if start is not None else handle.truncated(D).zero()
    ell = LieElement(handle.truncated(D), ell.coords)
    steps = []
    for d in range(first_degree, D + 1):
        hd = handle.truncated(d)
        base = LieElement(hd, {k: v for k, v in ell.coords.items() if hd.degree(k) < d})
        idx = list(handle.degree_range(d))
        r0 = residual(base, d)
        cols = []
        for k in idx:
            rk = residual(base + LieElement(hd, {k: 1}), d)
            cols.append({key: rk.get(key, 0) - r0.get(key, 0) for key in set(rk) | set(r0)})
        keys = sorted(set(r0).union(*[set(c) for c in cols]), key=repr)
        rows = []
        rhs = []
        for key in keys:
            row = {j: cols[j][key] for j in range(len(idx)) if cols[j].get(key)}
            rows.append(row)
            rhs.append(-r0.get(key, 0))
        sol = solve_affine(rows, rhs, len(idx))
        if sol.solution is None:
            obs = Obstruction(d, [hd.basis_label(k) for k in idx],
                              [[repr(k), r, b] for k, r, b in zip(keys, rows, rhs)],
                              sol.inconsistent_row or {})
            return base, steps, obs
        x = sol.solution
        if free_choice is not None and sol.nullity:
            free = [j for j in range(len(idx)) if j not in set(sol.pivots)]
            pins = free_choice(d, [idx[j] for j in free]) or {}
            if pins:
                pos = {k: j for j, k in enumerate(idx)}
                extra_rows = rows + [{pos[k]: 1} for k in pins]
                extra_rhs = rhs + [Fraction(v) for v in pins.values()]
                x = solve_affine(extra_rows, extra_rhs, len(idx)).solution
        new = dict(base.coords)
        for j, k in enumerate(idx):
            if x[j]:
                new[k] = x[j]
        ell = LieElement(handle.truncated(D), {**ell.coords, **new})
        ell = LieElement(handle.truncated(D), {k: v for k, v in ell.coords.items()
                                                if handle.degree(k) <= d and v})
        rep = [[hd.basis_label(k), f"{x[j].numerator}/{x[j].denominator}"] for j, k in enumerate(idx) if x[j]]
        steps.append(DegreeStep(d, sol.n_equations, sol.n_unknowns, sol.rank, sol.nullity, rep))
    return ell, steps, None


def random_free_choice(seed: int, scale: int = 3) -> Callable:
    """Free-coordinate pinning by small seeded random rationals."""
    rng = random.Random(seed)

    def choose(d, free):
        return {k: Fraction(rng.randint(-scale, scale), rng.randint(1, scale)) for k in free}
    return choose


# -------------------------------------------------------------- associators

def solve_associator(mu=1, D: int = 4, free_choice: Callable | None = None) -> SolveReport:
    mu = Fraction(mu)
    if not mu:
        raise ValueError("mu must be nonzero")
    if D < 1:
        raise ValueError("D must be >= 1")
    h = f2(D)

    def residual(ell, d):
        return _residual_vector(assoc_equations(mu, exp(ell, d), d), d)
    ell, steps, obs = solve_by_degree(h, residual, D, free_choice=free_choice)
    cert = D if obs is None else obs.degree - 1
    sol = AssocTuple(mu, exp(ell, D)) if cert >= 1 or obs is None else None
    return SolveReport("assoc", D, cert, sol, steps, obs)


def solve_cyclotomic(base: AssocTuple, N: int, D: int | None = None, free_choice: Callable | None = None,
                     shift: int | None = None) -> SolveReport:
    D = base.D if D is None else D
    if base.D < D:
        raise ValueError(f"base associator only known through degree {base.D}")
    if N < 1:
        raise ValueError("N must be >= 1")
    h = kernel_free(N, D)
    phi = base.phi

    def residual(ell, d):
        t = CycAssocTuple(AssocTuple(base.mu, phi.truncate(d)), exp(ell, d), N)
        return _residual_vector(cyc_equations(t, d, shift), d)
    ell, steps, obs = solve_by_degree(h, residual, D, free_choice=free_choice)
    cert = D if obs is None else obs.degree - 1
    sol = CycAssocTuple(AssocTuple(base.mu, phi.truncate(D)), exp(ell, D), N)
    return SolveReport("cycassoc", D, cert, sol, steps, obs)


# --------------------------------------------------------------- transport

@dataclass
class TransportReport:
    element: object
    steps: list
    obstruction: Obstruction | None

    @property
    def ok(self) -> bool:
        return self.obstruction is None

    @property
    def unique(self) -> bool:
        return self.ok and all(s.nullity == 0 for s in self.steps)


def _phi_residual(build, target_phi):
    def residual(ell, d):
        moved = build(ell, d)
        diff = moved.u - target_phi.truncate(d).u
        return {m: c for m, c in diff.degree_coords(d).items()}
    return residual


def transport_gt(t: AssocTuple, t2: AssocTuple) -> TransportReport:
    """The GT element a with a . t = t2 (lambda = mu2/mu)."""
    D = min(t.D, t2.D)
    lam = t2.mu / t.mu

    def build(ell, d):
        return act_gt_on_assoc(GTElement(lam, exp(ell, d)), AssocTuple(t.mu, t.phi.truncate(d))).phi
    ell, steps, obs = solve_by_degree(f2(D), _phi_residual(build, t2.phi), D)
    return TransportReport(GTElement(lam, exp(ell, D)), steps, obs)


def transport_grt(t: AssocTuple, t2: AssocTuple) -> TransportReport:
    """The GRT element b with t . b = t2."""
    D = min(t.D, t2.D)
    lam = t2.mu / t.mu

    def build(ell, d):
        return act_assoc_grt(AssocTuple(t.mu, t.phi.truncate(d)), GRTElement(lam, exp(ell, d))).phi
    ell, steps, obs = solve_by_degree(f2(D), _phi_residual(build, t2.phi), D)
    return TransportReport(GRTElement(lam, exp(ell, D)), steps, obs)


def _cyc_at(t: CycAssocTuple, d: int) -> CycAssocTuple:
    return CycAssocTuple(AssocTuple(t.mu, t.base.phi.truncate(d)), t.psi.truncate(d), t.N)


def transport_gtm(t: CycAssocTuple, t2: CycAssocTuple) -> TransportReport:
    D = min(t.D, t2.D)
    base = transport_gt(t.base, t2.base)
    if not base.ok:
        return TransportReport(None, base.steps, base.obstruction)
    a0 = base.element

    def build(ell, d):
        a = GTMElement(GTElement(a0.lam, a0.f.truncate(d)), exp(ell, d), t.N)
        return act_gtm_on_cycassoc(a, _cyc_at(t, d)).psi
    ell, steps, obs = solve_by_degree(kernel_free(t.N, D), _phi_residual(build, t2.psi), D)
    return TransportReport(GTMElement(a0, exp(ell, D), t.N), base.steps + steps, obs)


def transport_grtgamma(t: CycAssocTuple, t2: CycAssocTuple) -> TransportReport:
    D = min(t.D, t2.D)
    base = transport_grt(t.base, t2.base)
    if not base.ok:
        return TransportReport(None, base.steps, base.obstruction)
    b0 = base.element

    def build(ell, d):
        b = GRTGammaElement(b0.lam, b0.g.truncate(d), exp(ell, d), t.N)
        return act_cycassoc_grtgamma(_cyc_at(t, d), b).psi
    ell, steps, obs = solve_by_degree(kernel_free(t.N, D), _phi_residual(build, t2.psi), D)
    return TransportReport(GRTGammaElement(b0.lam, b0.g, exp(ell, D), t.N), base.steps + steps, obs)


def stabilizer_probe(t) -> dict:
    """Solve a . t = t for each acting group; freeness means a unique, trivial solution."""
    out = {}
    if isinstance(t, AssocTuple):
        runs = {"gt": transport_gt(t, t), "grt": transport_grt(t, t)}
    else:
        runs = {"gtm": transport_gtm(t, t), "grtgamma": transport_grtgamma(t, t)}
    for name, r in runs.items():
        e = r.element
        series = []
        if e is not None:
            for attr in ("f", "g", "h"):
                s = getattr(e, attr, None)
                if isinstance(s, GroupLikeElement):
                    series.append(s)
            if isinstance(e, GTMElement):
                series.append(e.base.f)
        trivial = e is not None and e.lam == 1 and all(s.is_one() for s in series)
        out[name] = {"solved": r.ok, "unique": r.unique, "trivial": trivial,
                     "nullities": [s.nullity for s in r.steps]}
    return out
