"""N-chord diagrams as a Gamma-crossed product over U(t^Gamma), and their parenthesized version.

A morphism is a payload u in U(t^Gamma_I) followed by a pure label shift
delta; composition is (u, d)(v, e) = (u * (d.v), d + e), where d.v is the
Gamma-action on chords. Payloads are indexed by strand names, so moving
parentheses or permuting strands only changes the endpoint objects.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .graded_lie import (LieMorphism, build_algebra, gamma_images, insertion_images_0,
                         insertion_images_i, t0, tgamma_presentation, tij, _images_to_elements)
from .pab import GenInstance, ParObject, apply_generator, obj_compose_0, obj_compose_i, parse_object
from .uea import UEAElement, inverse, multiply, uea_map


def payload_algebra(strands, N: int, D: int):
    return build_algebra(tgamma_presentation(tuple(strands), N), D)


def _gamma_morphism(h, gv: dict) -> LieMorphism:
    return LieMorphism(h, h, _images_to_elements(h, gamma_images(h.presentation, gv)), validate=False)


def gamma_act_uea(gv: dict, u: UEAElement) -> UEAElement:
    if not any(v % u.handle.presentation.N for v in gv.values()):
        return u
    return uea_map(_gamma_morphism(u.handle, gv), u)


@dataclass(frozen=True)
class CDGammaMorphism:
    src_labels: tuple  # ((strand, label), ...) sorted by strand
    shift: tuple  # ((strand, delta), ...) same strands
    u: UEAElement

    @property
    def N(self) -> int:
        return self.u.handle.presentation.N

    @property
    def strands(self) -> tuple:
        return tuple(s for s, _ in self.src_labels)

    @property
    def tgt_labels(self) -> tuple:
        sh = dict(self.shift)
        return tuple((s, (a + sh.get(s, 0)) % self.N) for s, a in self.src_labels)

    def shift_dict(self) -> dict:
        return {s: d % self.N for s, d in self.shift if d % self.N}

    def __eq__(self, other):
        if not isinstance(other, CDGammaMorphism):
            return NotImplemented
        return (self.src_labels == other.src_labels and self.shift_dict() == other.shift_dict()
                and self.u == other.u)

    def __hash__(self):
        return hash((self.src_labels, tuple(sorted(self.shift_dict().items()))))


def cd_morphism(src_labels: dict, shift: dict, u: UEAElement) -> CDGammaMorphism:
    N = u.handle.presentation.N
    strands = tuple(sorted(src_labels))
    return CDGammaMorphism(tuple((s, src_labels[s] % N) for s in strands),
                           tuple((s, shift.get(s, 0) % N) for s in strands), u)


def cd_compose(f: CDGammaMorphism, g: CDGammaMorphism) -> CDGammaMorphism:
    """f then g."""
    if f.tgt_labels != g.src_labels:
        raise ValueError(f"label mismatch: {f.tgt_labels} vs {g.src_labels}")
    u = multiply(f.u, gamma_act_uea(f.shift_dict(), g.u))
    sh = dict(f.shift)
    for s, d in g.shift:
        sh[s] = (sh.get(s, 0) + d) % f.N
    return cd_morphism(dict(f.src_labels), sh, u)


def cd_inverse(f: CDGammaMorphism) -> CDGammaMorphism:
    neg = {s: -d for s, d in f.shift}
    return cd_morphism(dict(f.tgt_labels), neg, gamma_act_uea(neg, inverse(f.u)))


def cd_add(f: CDGammaMorphism, g: CDGammaMorphism) -> CDGammaMorphism:
    if f.src_labels != g.src_labels or f.shift_dict() != g.shift_dict():
        raise ValueError("can only add parallel morphisms")
    return CDGammaMorphism(f.src_labels, f.shift, f.u + g.u)


# --------------------------------------------------------- parenthesized

@dataclass(frozen=True)
class PaCDMorphism:
    src: ParObject
    tgt: ParObject
    payload: CDGammaMorphism

    def __post_init__(self):
        if dict(self.payload.src_labels) != self.src.labels():
            raise ValueError("payload labels do not match the source object")
        if dict(self.payload.tgt_labels) != self.tgt.labels():
            raise ValueError("payload labels do not match the target object")

    def __mul__(self, other: "PaCDMorphism") -> "PaCDMorphism":
        return pacd_compose(self, other)

    def __add__(self, other: "PaCDMorphism") -> "PaCDMorphism":
        if self.src != other.src or self.tgt != other.tgt:
            raise ValueError("can only add parallel morphisms")
        return PaCDMorphism(self.src, self.tgt, cd_add(self.payload, other.payload))

    def inverse(self) -> "PaCDMorphism":
        return PaCDMorphism(self.tgt, self.src, cd_inverse(self.payload))

    def __eq__(self, other):
        if not isinstance(other, PaCDMorphism):
            return NotImplemented
        return self.src == other.src and self.tgt == other.tgt and self.payload == other.payload

    def __hash__(self):
        return hash((self.src, self.tgt))


def pacd_compose(f: PaCDMorphism, g: PaCDMorphism) -> PaCDMorphism:
    if f.tgt != g.src:
        raise ValueError(f"cannot compose: {f.tgt} != {g.src}")
    return PaCDMorphism(f.src, g.tgt, cd_compose(f.payload, g.payload))


class PaCDContext:
    """Generators X, H, a, K, L, b over a fixed strand set, modulus N and truncation D."""

    def __init__(self, strands, N: int, D: int):
        self.strands = tuple(sorted(strands))
        self.N = N
        self.D = D
        self.h = payload_algebra(self.strands, N, D)

    def obj(self, text: str) -> ParObject:
        return parse_object(text, self.N)

    def _mk(self, src: ParObject, tgt: ParObject, u: UEAElement | None = None, shift=None) -> PaCDMorphism:
        u = UEAElement.one(self.h) if u is None else u
        return PaCDMorphism(src, tgt, cd_morphism(src.labels(), shift or {}, u))

    def identity(self, src) -> PaCDMorphism:
        src = self.obj(src) if isinstance(src, str) else src
        return self._mk(src, src)

    def _move(self, head, src, blocks, exp):
        src = self.obj(src) if isinstance(src, str) else src
        tgt, _ = apply_generator(GenInstance(head, tuple(tuple(b) for b in blocks), exp), src)
        return src, tgt

    def X(self, src, A, B, exp: int = 1) -> PaCDMorphism:
        s, t = self._move("R", src, (A, B), exp)
        return self._mk(s, t)

    def a(self, src, A, B, C, exp: int = 1) -> PaCDMorphism:
        s, t = self._move("Phi", src, (A, B, C), exp)
        return self._mk(s, t)

    def b(self, src, P, A, B, exp: int = 1) -> PaCDMorphism:
        s, t = self._move("Psi", src, (P, A, B), exp)
        return self._mk(s, t)

    def L(self, src, A, power: int = 1) -> PaCDMorphism:
        """Label shift by `power` on the strands of A (payload 1)."""
        src = self.obj(src) if isinstance(src, str) else src
        sh = {x: power for x in A}
        return self._mk(src, src.shift_labels(sh), shift=sh)

    def K_payload(self, P, A) -> UEAElement:
        h = self.h
        e = h.zero()
        for x in A:
            e = e + h.gen(t0(x))
        for x, y in itertools.combinations(sorted(A), 2):
            for c in range(self.N):
                e = e + h.gen(tij(x, y, c, self.N))
        for p in P:
            if p == 0:
                continue
            for x in A:
                for c in range(self.N):
                    e = e + h.gen(tij(p, x, c, self.N))
        return UEAElement.from_lie(e)

    def K(self, src, P, A) -> PaCDMorphism:
        src = self.obj(src) if isinstance(src, str) else src
        return self._mk(src, src, self.K_payload(P, A))

    def H(self, src, A, B) -> PaCDMorphism:
        src = self.obj(src) if isinstance(src, str) else src
        h = self.h
        e = h.zero()
        for x in A:
            for y in B:
                e = e + h.gen(tij(x, y, 0, self.N))
        return self._mk(src, src, UEAElement.from_lie(e))

    def Lpow(self, src, A, k: int) -> PaCDMorphism:
        """(L^{0,A})^{(k)}: k successive unit shifts, k may be negative."""
        src = self.obj(src) if isinstance(src, str) else src
        m = self.identity(src)
        step = 1 if k >= 0 else -1
        for _ in range(abs(k)):
            m = m * self.L(m.tgt, A, step)
        return m


def _chain(*ms):
    acc = ms[0]
    for m in ms[1:]:
        acc = acc * m
    return acc


CD_TAGS = ("L-order", "LK-commute", "b-pentagon", "L-cabling", "L-braiding", "K-split-inner", "K-split-outer")


def cd_relation_sides(tag: str, N: int, D: int) -> tuple:
    if tag in ("L-order", "LK-commute"):
        c = PaCDContext((1,), N, D)
        if tag == "L-order":
            return c.Lpow("(0 1_0)", (1,), N), c.identity("(0 1_0)")
        o = c.obj("(0 1_0)")
        lhs = c.L(o, (1,)) * c.K(c.obj(f"(0 1_{1 % N})"), (0,), (1,))
        rhs = c.K(o, (0,), (1,)) * c.L(o, (1,))
        return lhs, rhs
    if tag == "b-pentagon":
        c = PaCDContext((1, 2, 3), N, D)
        o = c.obj("(((0 1_0) 2_0) 3_0)")
        m1 = c.b(o, (0, 1), (2,), (3,))
        lhs = m1 * c.b(m1.tgt, (0,), (1,), (2, 3))
        r1 = c.b(o, (0,), (1,), (2,))
        r2 = c.b(r1.tgt, (0,), (1, 2), (3,))
        rhs = r1 * r2 * c.a(r2.tgt, (1,), (2,), (3,))
        return lhs, rhs
    c = PaCDContext((1, 2), N, D)
    o = c.obj("((0 1_0) 2_0)")
    if tag == "L-cabling":
        m1 = c.b(o, (0,), (1,), (2,))
        m2 = c.L(m1.tgt, (1, 2))
        lhs = m1 * m2 * c.b(m2.tgt, (0,), (1,), (2,), -1)
        r1 = c.L(o, (1,))
        rhs = r1 * c.L(r1.tgt, (2,))
        return lhs, rhs
    if tag == "L-braiding":
        lhs = c.L(o, (2,))
        seq = [c.b(o, (0,), (1,), (2,))]
        seq.append(c.X(seq[-1].tgt, (1,), (2,)))
        seq.append(c.b(seq[-1].tgt, (0,), (2,), (1,), -1))
        seq.append(c.L(seq[-1].tgt, (2,)))
        seq.append(c.b(seq[-1].tgt, (0,), (2,), (1,)))
        seq.append(c.X(seq[-1].tgt, (2,), (1,)))
        seq.append(c.b(seq[-1].tgt, (0,), (1,), (2,), -1))
        return lhs, _chain(*seq)
    if tag == "K-split-inner":
        o2 = c.obj("(0 (1_0 2_0))")
        lhs = c.K(o2, (0,), (1, 2))
        b1 = c.b(o2, (0,), (1,), (2,), -1)
        term1 = b1 * c.K(b1.tgt, (0,), (1,)) * b1.inverse()
        x1 = c.X(o2, (1,), (2,))
        b2 = c.b(x1.tgt, (0,), (2,), (1,), -1)
        conj = x1 * b2
        term2 = conj * c.K(conj.tgt, (0,), (2,)) * conj.inverse()
        rhs = term1 + term2
        for k in range(N):
            lk = c.Lpow(o2, (1,), k)
            rhs = rhs + lk * c.H(lk.tgt, (1,), (2,)) * lk.inverse()
        return lhs, rhs
    if tag == "K-split-outer":
        lhs = c.K(o, (0, 1), (2,))
        b0 = c.b(o, (0,), (1,), (2,))
        x1 = c.X(b0.tgt, (1,), (2,))
        b2 = c.b(x1.tgt, (0,), (2,), (1,), -1)
        conj = b0 * x1 * b2
        rhs = conj * c.K(conj.tgt, (0,), (2,)) * conj.inverse()
        for k in range(N):
            lk = c.Lpow(o, (1,), k)
            bk = c.b(lk.tgt, (0,), (1,), (2,))
            g = lk * bk
            rhs = rhs + g * c.H(g.tgt, (1,), (2,)) * g.inverse()
        return lhs, rhs
    raise ValueError(f"unknown CD relation {tag!r}")


def check_cd_relation(tag: str, N: int, D: int = 3) -> dict:
    lhs, rhs = cd_relation_sides(tag, N, D)
    ok = lhs == rhs
    return {"id": f"cd.{tag}[N={N},D={D}]", "status": "pass" if ok else "fail",
            "details": {"source": str(lhs.src), "target": str(lhs.tgt),
                        "lhs_payload": repr(lhs.payload.u), "rhs_payload": repr(rhs.payload.u)}}


# -------------------------------------------------------- moperadic structure

def cd_mop_compose_i(f: CDGammaMorphism, i, J) -> CDGammaMorphism:
    """Insert strands J at strand i: payload via the insertion map, label of i broadcast to J."""
    h = f.u.handle
    new_strands, images = insertion_images_i(h.presentation, i, J)
    tgt = payload_algebra(new_strands, h.presentation.N, h.D)
    mor = LieMorphism(h, tgt, _images_to_elements(tgt, images), validate=False)
    lab, sh = dict(f.src_labels), dict(f.shift)
    for d in (lab, sh):
        v = d.pop(i)
        for x in J:
            d[x] = v
    return cd_morphism(lab, sh, uea_map(mor, f.u))


def cd_mop_compose_0(f: CDGammaMorphism, inner_labels: dict) -> CDGammaMorphism:
    """Insert strands next to 0 (identity on the inner strands, with the given labels)."""
    h = f.u.handle
    J = tuple(sorted(inner_labels))
    new_strands, images = insertion_images_0(h.presentation, J)
    tgt = payload_algebra(new_strands, h.presentation.N, h.D)
    mor = LieMorphism(h, tgt, _images_to_elements(tgt, images), validate=False)
    lab, sh = dict(f.src_labels), dict(f.shift)
    lab.update(inner_labels)
    for x in J:
        sh[x] = 0
    return cd_morphism(lab, sh, uea_map(mor, f.u))


def pacd_mop_compose_i(f: PaCDMorphism, i: int, inner: ParObject) -> PaCDMorphism:
    """f composed at leaf i with the identity of an unlabelled inner object."""
    src = obj_compose_i(f.src, i, inner)
    tgt = obj_compose_i(f.tgt, i, inner)
    m = len(inner.names())
    p = f.payload
    # move the strands above i out of the way, then split i into i..i+m-1
    mapping = {j: (j if j <= i else j + m - 1) for j in p.strands}
    u = uea_map(_strand_rename_morphism(p.u.handle, mapping), p.u)
    lab = {mapping[s]: a for s, a in p.src_labels}
    sh = {mapping[s]: d for s, d in p.shift}
    q = cd_mop_compose_i(cd_morphism(lab, sh, u), i, tuple(range(i, i + m)))
    return PaCDMorphism(src, tgt, q)


def _strand_rename_morphism(h, mapping: dict) -> LieMorphism:
    pres = h.presentation
    N = pres.N
    strands = tuple(sorted(mapping.get(s, s) for s in pres.strands))
    tgt = build_algebra(tgamma_presentation(strands, N), h.D)
    images = {}
    for g in pres.generators:
        if g.kind == "t0i":
            images[g] = tgt.gen(t0(mapping[g.indices[0]]))
        else:
            a, b = g.indices
            images[g] = tgt.gen(tij(mapping[a], mapping[b], g.label, N))
    return LieMorphism(h, tgt, images, validate=False)
