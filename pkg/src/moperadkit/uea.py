"""Degree-truncated universal enveloping algebras in PBW normal form.

A PBW monomial is a non-decreasing tuple of Lie basis indices. Products are
straightened by moving factors left past larger ones, xy = yx + [x,y].
Group-like elements (points of the pro-unipotent group exp of the completed
Lie algebra) are UEA elements with constant term 1 and primitive logarithm.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from .graded_lie import LieAlgebraHandle, LieElement, LieMorphism, build_algebra, free_presentation
from .linalg import axpy

PBWMonomial = tuple


def _mdeg(h: LieAlgebraHandle, m: tuple) -> int:
    dg = h._data.degree_of
    return sum(dg[i] for i in m)


def _mul_right(h: LieAlgebraHandle, m: tuple, x: int) -> dict:
    """Normal form of (sorted monomial m) * (basis element x)."""
    if not m or m[-1] <= x:
        return {m + (x,): 1}
    memo = h._data.__dict__.setdefault("_pbw_memo", {})
    key = (m, x)
    r = memo.get(key)
    if r is not None:
        return r
    a = m[-1]
    p = m[:-1]
    out: dict = {}
    # p a x = (p x) a + p [a, x]
    for q, c in _mul_right(h, p, x).items():
        axpy(out, c, _mul_right(h, q, a))
    for z, c in h._data.bracket_basis(a, x).items():
        axpy(out, c, _mul_right(h, p, z))
    memo[key] = out
    return out


def _mul_monomials(h: LieAlgebraHandle, m1: tuple, m2: tuple) -> dict:
    if not m2:
        return {m1: 1}
    if not m1:
        return {m2: 1}
    memo = h._data.__dict__.setdefault("_pbw_mm", {})
    key = (m1, m2)
    r = memo.get(key)
    if r is not None:
        return r
    cur = {m1: 1}
    for x in m2:
        nxt: dict = {}
        for q, c in cur.items():
            axpy(nxt, c, _mul_right(h, q, x))
        cur = nxt
    memo[key] = cur
    return cur


class UEAElement:
    __slots__ = ("handle", "trunc", "terms")

    def __init__(self, handle: LieAlgebraHandle, terms: dict, trunc: int | None = None):
        self.handle = handle
        self.trunc = handle.D if trunc is None else min(trunc, handle.D)
        t = self.trunc
        self.terms = {m: Fraction(c) for m, c in terms.items()
                      if c and (not m or _mdeg(handle, m) <= t)}

    # construction
    @classmethod
    def one(cls, handle, trunc=None):
        return cls(handle, {(): 1}, trunc)

    @classmethod
    def zero(cls, handle, trunc=None):
        return cls(handle, {}, trunc)

    @classmethod
    def from_lie(cls, a: LieElement, trunc=None):
        return cls(a.handle, {(k,): v for k, v in a.coords.items()}, trunc)

    def _check(self, other) -> tuple:
        if self.handle.presentation != other.handle.presentation:
            raise ValueError(f"UEA elements over different algebras: {self.handle.ident} vs {other.handle.ident}")
        h = self.handle if self.handle.D <= other.handle.D else other.handle
        return h, min(self.trunc, other.trunc)

    def __add__(self, other):
        h, t = self._check(other)
        d = dict(self.terms)
        axpy(d, 1, other.terms)
        return UEAElement(h, d, t)

    def __sub__(self, other):
        h, t = self._check(other)
        d = dict(self.terms)
        axpy(d, -1, other.terms)
        return UEAElement(h, d, t)

    def __neg__(self):
        return UEAElement(self.handle, {m: -c for m, c in self.terms.items()}, self.trunc)

    def scale(self, s):
        s = Fraction(s)
        return UEAElement(self.handle, {m: s * c for m, c in self.terms.items()}, self.trunc)

    def __mul__(self, other):
        if not isinstance(other, UEAElement):
            return self.scale(other)
        return multiply(self, other)

    def __rmul__(self, s):
        return self.scale(s)

    def __eq__(self, other):
        if not isinstance(other, UEAElement):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def constant(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def component(self, d: int) -> "UEAElement":
        h = self.handle
        return UEAElement(h, {m: c for m, c in self.terms.items() if _mdeg(h, m) == d}, self.trunc)

    def truncate(self, D: int) -> "UEAElement":
        return UEAElement(self.handle, self.terms, min(D, self.trunc))

    def min_degree(self) -> int | None:
        if not self.terms:
            return None
        return min(_mdeg(self.handle, m) for m in self.terms)

    def degree_coords(self, d: int) -> dict:
        h = self.handle
        return {m: c for m, c in self.terms.items() if _mdeg(h, m) == d}

    def __repr__(self):
        if not self.terms:
            return "0"
        h = self.handle
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
            mono = "*".join(h.basis_label(i) for i in m) or "1"
            parts.append(f"({c}){mono}")
        return " + ".join(parts)


def multiply(a: UEAElement, b: UEAElement) -> UEAElement:
    h, t = a._check(b)
    out: dict = {}
    deg = {}
    for m2 in b.terms:
        deg[m2] = _mdeg(h, m2)
    for m1, c1 in a.terms.items():
        d1 = _mdeg(h, m1)
        for m2, c2 in b.terms.items():
            if d1 + deg[m2] > t:
                continue
            axpy(out, c1 * c2, _mul_monomials(h, m1, m2))
    return UEAElement(h, out, t)


def _series_power_sum(u: UEAElement, coeffs) -> UEAElement:
    """sum_k coeffs(k) u^k for u without constant term, truncated."""
    h, t = u.handle, u.trunc
    acc = UEAElement(h, {(): coeffs(0)}, t)
    p = UEAElement.one(h, t)
    k = 0
    while True:
        k += 1
        p = multiply(p, u)
        if p.is_zero():
            break
        acc = acc + p.scale(coeffs(k))
    return acc


def exp(a, trunc: int | None = None) -> "GroupLikeElement":
    """exp of a Lie element (or a primitive UEA element) with no degree-0 part."""
    u = a if isinstance(a, UEAElement) else UEAElement.from_lie(a, trunc)
    if trunc is not None:
        u = u.truncate(trunc)
    if u.constant():
        raise ValueError("exp needs an element without constant term")
    return GroupLikeElement(_series_power_sum(u, lambda k: Fraction(1, factorial(k))))


def log_uea(g: UEAElement) -> UEAElement:
    if g.constant() != 1:
        raise ValueError("log needs constant term 1")
    u = g - UEAElement.one(g.handle, g.trunc)
    return _series_power_sum(u, lambda k: Fraction((-1) ** (k + 1), k) if k else Fraction(0))


def to_lie(u: UEAElement) -> LieElement:
    """Primitive UEA element -> Lie element; raises if u is not primitive."""
    coords = {}
    for m, c in u.terms.items():
        if len(m) != 1:
            raise ValueError(f"element is not primitive (monomial {m})")
        coords[m[0]] = c
    h = u.handle if u.trunc == u.handle.D else u.handle.truncated(u.trunc)
    return LieElement(h, coords)


def log(g) -> LieElement:
    u = g.u if isinstance(g, GroupLikeElement) else g
    return to_lie(log_uea(u))


def inverse(g: UEAElement) -> UEAElement:
    c = g.constant()
    if not c:
        raise ValueError("not invertible: zero constant term")
    u = g.scale(1 / c) - UEAElement.one(g.handle, g.trunc)
    return _series_power_sum(u, lambda k: Fraction((-1) ** k)).scale(1 / c)


class GroupLikeElement:
    """exp of a Lie series; wraps its PBW expansion."""
    __slots__ = ("u",)

    def __init__(self, u: UEAElement):
        if u.constant() != 1:
            raise ValueError("group-like elements have constant term 1")
        self.u = u

    @classmethod
    def one(cls, handle, trunc=None):
        return cls(UEAElement.one(handle, trunc))

    @property
    def handle(self):
        return self.u.handle

    @property
    def trunc(self):
        return self.u.trunc

    def __mul__(self, other):
        if isinstance(other, GroupLikeElement):
            return GroupLikeElement(multiply(self.u, other.u))
        if isinstance(other, UEAElement):
            return multiply(self.u, other)
        return NotImplemented

    def inverse(self):
        return GroupLikeElement(inverse(self.u))

    def __pow__(self, lam):
        return power(self, lam)

    def __eq__(self, other):
        if not isinstance(other, GroupLikeElement):
            return NotImplemented
        return self.u == other.u

    def __hash__(self):
        return hash(self.u)

    def log(self) -> LieElement:
        return log(self)

    def truncate(self, D):
        return GroupLikeElement(self.u.truncate(D))

    def is_one(self) -> bool:
        return (self.u - UEAElement.one(self.handle, self.trunc)).is_zero()

    def is_grouplike(self) -> bool:
        try:
            log(self)
            return True
        except ValueError:
            return False

    def __repr__(self):
        return f"exp({self.log()!r})"


def product(*gs):
    it = iter(gs)
    acc = next(it)
    for g in it:
        acc = acc * g
    return acc


def power(g: GroupLikeElement, lam) -> GroupLikeElement:
    """g^lam = exp(lam log g) for rational lam."""
    return exp(log(g) * Fraction(lam), g.trunc)


def Ad(g: GroupLikeElement, a):
    """g a g^{-1}; a may be a UEA element, a group-like or a Lie element."""
    gi = g.inverse()
    if isinstance(a, GroupLikeElement):
        return GroupLikeElement(multiply(multiply(g.u, a.u), gi.u))
    if isinstance(a, LieElement):
        return to_lie(multiply(multiply(g.u, UEAElement.from_lie(a, g.trunc)), gi.u))
    return multiply(multiply(g.u, a), gi.u)


def _target_lie_handle(args, trunc):
    h = args[0].handle
    t = min(min(a.trunc for a in args), trunc if trunc is not None else h.D)
    return h.truncated(t), t


def lie_substitute(ell: LieElement, images: list, target: LieAlgebraHandle) -> LieElement:
    """Evaluate a free Lie series at (possibly inhomogeneous) Lie elements."""
    pres = ell.handle.presentation
    if pres.family != "free":
        raise ValueError("group substitution needs a free source algebra")
    imgs = {g: LieElement(target, x.coords) for g, x in zip(pres.generators, images)}
    return LieMorphism(ell.handle, target, imgs, validate=False)(ell)


def group_substitute(f: GroupLikeElement, args: list, trunc: int | None = None) -> GroupLikeElement:
    """f(args): exp(l(log a_1, ..., log a_k)) with l = log f over a free handle."""
    pres = f.handle.presentation
    if len(args) != len(pres.generators):
        raise ValueError(f"expected {len(pres.generators)} arguments, got {len(args)}")
    target, t = _target_lie_handle(args, trunc)
    logs = [LieElement(target, log(a).coords) for a in args]
    ell = log(f.truncate(t))
    return exp(lie_substitute(ell, logs, target), t)


def uea_map(morphism: LieMorphism, u: UEAElement) -> UEAElement:
    """Extend a degree-preserving Lie morphism multiplicatively to U."""
    tgt = morphism.target
    t = min(u.trunc, tgt.D)
    imgs = {}
    out = UEAElement.zero(tgt, t)
    for m, c in u.terms.items():
        acc = UEAElement.one(tgt, t)
        for i in m:
            x = imgs.get(i)
            if x is None:
                x = UEAElement.from_lie(morphism(u.handle.basis_element(i)), t)
                imgs[i] = x
            acc = multiply(acc, x)
        out = out + acc.scale(c)
    return out


# ----------------------------------------------------------- free handles

def free_algebra(names, D: int) -> LieAlgebraHandle:
    return build_algebra(free_presentation(tuple(names)), D)


def f2(D: int) -> LieAlgebraHandle:
    return free_algebra(("x", "y"), D)


def kernel_free(N: int, D: int) -> LieAlgebraHandle:
    """Free Lie algebra on X, y0, ..., y(N-1) (Lie algebra of ker phi_N)."""
    return free_algebra(("X",) + tuple(f"y{a}" for a in range(N)), D)


def kernel_embed_phiN(g: GroupLikeElement, N: int, trunc: int | None = None) -> GroupLikeElement:
    """Push g(X | y(0..N-1)) to F_2 via X = x^N and y(a) = x^-a y x^a."""
    t = g.trunc if trunc is None else trunc
    h = f2(t)
    X = exp(h.gen("x"))
    Y = exp(h.gen("y"))
    args = [power(X, N)]
    for a in range(N):
        args.append(power(X, -a) * Y * power(X, a))
    return group_substitute(g, args, t)


# ------------------------------------------------------------ serialization

def uea_to_json(u) -> dict:
    u = u.u if isinstance(u, GroupLikeElement) else u
    terms = [[list(m), f"{c.numerator}/{c.denominator}"] for m, c in sorted(u.terms.items())]
    return {"algebra": u.handle.ident, "trunc": u.trunc, "terms": terms}


def uea_from_json(handle: LieAlgebraHandle, obj: dict) -> UEAElement:
    if obj.get("algebra") not in (None, handle.ident):
        raise ValueError(f"element belongs to {obj.get('algebra')}, not {handle.ident}")
    return UEAElement(handle, {tuple(m): Fraction(c) for m, c in obj["terms"]}, obj["trunc"])
