"""Truncated graded Lie algebras presented by degree-1 generators and quadratic relations.

Covers the cyclotomic infinitesimal braid algebras t^Gamma_I (generators t_{0i}
and t^a_{ij}), the classical t_n, and free Lie algebras. Each degree is the
quotient of the free Lie algebra (Lyndon basis) by the relation ideal; the
canonical basis consists of the Lyndon brackets that are not pivots of the
ideal's echelon form.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .freelie import free_lie, standard_factorization
from .linalg import EchelonSpace, axpy


# ---------------------------------------------------------------- generators

@dataclass(frozen=True)
class Generator:
    kind: str  # "t0i", "tij_alpha" or "free"
    indices: tuple
    label: int | None = None

    @property
    def degree(self) -> int:
        return 1

    def name(self) -> str:
        if self.kind == "t0i":
            return f"t0.{self.indices[0]}"
        if self.kind == "tij_alpha":
            i, j = self.indices
            return f"t.{i}.{j}.{self.label}"
        return str(self.indices[0])


def t0(i) -> Generator:
    if i == 0:
        raise ValueError("t0i needs a non-frozen strand")
    return Generator("t0i", (i,))


def tij(i, j, alpha: int = 0, N: int = 1) -> Generator:
    """t^alpha_{ij}, normalized to i < j using t^a_{ij} = t^{-a}_{ji}."""
    if i == j:
        raise ValueError("t_ij needs distinct strands")
    if 0 in (i, j):
        raise ValueError("use t0 for chords to the frozen strand")
    if j < i:
        i, j, alpha = j, i, -alpha
    return Generator("tij_alpha", (i, j), alpha % N)


def free_gen(name: str) -> Generator:
    return Generator("free", (name,))


def parse_generator(name: str) -> Generator:
    parts = name.split(".")
    if parts[0] == "t0" and len(parts) == 2:
        return Generator("t0i", (_strand(parts[1]),))
    if parts[0] == "t" and len(parts) == 4:
        return Generator("tij_alpha", (_strand(parts[1]), _strand(parts[2])), int(parts[3]))
    return free_gen(name)


def _strand(s: str):
    return int(s) if s.lstrip("-").isdigit() else s


# -------------------------------------------------------------- presentations

@dataclass(frozen=True)
class LiePresentation:
    """Generators in a fixed order plus relations sum c [g_a, g_b] (a < b)."""
    generators: tuple
    relations: tuple = ()  # ((name, ((a, b, coef), ...)), ...)
    N: int = 1
    strands: tuple = ()
    family: str = "free"  # "tgamma", "t" or "free"

    def index(self, g: Generator) -> int:
        return self._gen_index()[g]

    def _gen_index(self) -> dict:
        d = self.__dict__.get("_gi")
        if d is None:
            d = {g: i for i, g in enumerate(self.generators)}
            object.__setattr__(self, "_gi", d)
        return d

    @property
    def ident(self) -> str:
        if self.family == "free":
            return "free(" + ",".join(g.name() for g in self.generators) + ")"
        s = ",".join(str(x) for x in self.strands)
        return f"{self.family}[{s}|N={self.N}]"


def _bilinear(gi: dict, left: dict, right: dict) -> tuple:
    """Expand [sum a_g g, sum b_h h] into normalized ((i, j, c), ...) with i < j."""
    acc: dict = {}
    for g, a in left.items():
        for h, b in right.items():
            i, j = gi[g], gi[h]
            if i == j:
                continue
            c = Fraction(a) * b
            if i > j:
                i, j, c = j, i, -c
            acc[(i, j)] = acc.get((i, j), 0) + c
    return tuple(sorted((i, j, c) for (i, j), c in acc.items() if c))


def free_presentation(names) -> LiePresentation:
    return LiePresentation(tuple(free_gen(n) for n in names))


def tgamma_presentation(strands, N: int = 1, frozen: bool = True) -> LiePresentation:
    """t^Gamma_I for Gamma = Z/N; with frozen=False and N=1 this is the classical t_n."""
    return _tgamma_presentation(tuple(sorted(strands)), N, frozen)


@lru_cache(maxsize=None)
def _tgamma_presentation(strands: tuple, N: int, frozen: bool) -> LiePresentation:
    if 0 in strands:
        raise ValueError("0 is reserved for the frozen strand")
    gens = []
    if frozen:
        gens += [t0(i) for i in strands]
    gens += [tij(i, j, a, N) for i, j in itertools.combinations(strands, 2) for a in range(N)]
    gi = {g: k for k, g in enumerate(gens)}

    def T(i, j, a):
        return tij(i, j, a, N)

    rels = []

    def rel(name, left, right):
        r = _bilinear(gi, left, right)
        if r:
            rels.append((name, r))

    G = range(N)
    if frozen:
        for i in strands:
            for j, k in itertools.combinations(strands, 2):
                if i not in (j, k):
                    for a in G:
                        rel(f"tL[t0{i},t{j}{k}^{a}]", {t0(i): 1}, {T(j, k, a): 1})
    for (i, j), (k, l) in itertools.combinations(itertools.combinations(strands, 2), 2):
        if {i, j} & {k, l}:
            continue
        for a in G:
            for b in G:
                rel(f"tL[t{i}{j}^{a},t{k}{l}^{b}]", {T(i, j, a): 1}, {T(k, l, b): 1})
    for i, j, k in itertools.permutations(strands, 3):
        for a in G:
            for b in G:
                right: dict = {}
                for g in (T(i, k, a + b), T(j, k, b)):
                    right[g] = right.get(g, 0) + 1
                rel(f"t4T[{i}{j}{k};{a},{b}]", {T(i, j, a): 1}, right)
    if frozen:
        for i, j in itertools.permutations(strands, 2):
            right = {t0(j): 1}
            for a in G:
                g = T(i, j, a)
                right[g] = right.get(g, 0) + 1
            rel(f"t4Tbar[{i},{j}]", {t0(i): 1}, right)
        for i, j in itertools.combinations(strands, 2):
            left = {t0(i): 1, t0(j): 1}
            for b in G:
                left[T(i, j, b)] = left.get(T(i, j, b), 0) + 1
            for a in G:
                rel(f"t6Tbar[{i},{j};{a}]", left, {T(i, j, a): 1})
    family = "tgamma" if frozen else "t"
    return LiePresentation(tuple(gens), tuple(rels), N, strands, family)


def t_presentation(strands) -> LiePresentation:
    return tgamma_presentation(strands, 1, frozen=False)


# ------------------------------------------------------------ algebra data

class _LieData:
    """Per-presentation cache of the quotient, grown degree by degree."""

    def __init__(self, pres: LiePresentation):
        self.pres = pres
        self.k = len(pres.generators)
        self.free = free_lie(self.k)
        self.ideal: dict = {}  # degree -> EchelonSpace over Lyndon columns
        self.basis_words: list = []  # global index -> Lyndon word
        self.degree_of: list = []
        self.offsets: dict = {}  # degree -> first global index
        self.dims: list = []
        self._index_of_word: dict = {}
        self._bracket: dict = {}
        self.top = 0

    def extend(self, D: int) -> None:
        while self.top < D:
            d = self.top + 1
            words = self.free.words(d)
            sp = EchelonSpace()
            if d == 2:
                for _, r in self.pres.relations:
                    poly: dict = {}
                    for a, b, c in r:
                        axpy(poly, c, {(a, b): 1, (b, a): -1})
                    sp.add(self._cols(self.free.coords(poly)))
            elif d > 2:
                lower = self.ideal[d - 1]
                wl = self.free.words(d - 1)
                for row in list(lower.rows.values()):
                    for g in range(self.k):
                        vec: dict = {}
                        for col, c in row.items():
                            axpy(vec, c, self.free.ad_gen(g, wl[col]))
                        sp.add(self._cols(vec))
            self.ideal[d] = sp
            piv = sp.pivots()
            self.offsets[d] = len(self.basis_words)
            kept = [w for i, w in enumerate(words) if i not in piv]
            for w in kept:
                self._index_of_word[w] = len(self.basis_words)
                self.basis_words.append(w)
                self.degree_of.append(d)
            self.dims.append(len(kept))
            self.top = d

    def _cols(self, coords: dict) -> dict:
        return {self.free.col[w]: c for w, c in coords.items()}

    def reduce_coords(self, coords: dict, d: int) -> dict:
        """Lyndon coordinates (by word) in degree d -> quotient basis coordinates."""
        words = self.free.words(d)
        red = self.ideal[d].reduce(self._cols(coords))
        return {self._index_of_word[words[c]]: v for c, v in red.items()}

    def bracket_basis(self, i: int, j: int) -> dict:
        key = (i, j)
        r = self._bracket.get(key)
        if r is None:
            if i == j:
                r = {}
            elif i > j:
                r = {k: -v for k, v in self.bracket_basis(j, i).items()}
            else:
                d = self.degree_of[i] + self.degree_of[j]
                self.extend(d)
                co = self.free.bracket_words(self.basis_words[i], self.basis_words[j])
                r = self.reduce_coords(co, d)
            self._bracket[key] = r
        return r


@lru_cache(maxsize=None)
def _data(pres: LiePresentation) -> _LieData:
    return _LieData(pres)


# ----------------------------------------------------------------- handles

class LieAlgebraHandle:
    """Immutable view of a presentation truncated at degree D."""

    def __init__(self, pres: LiePresentation, D: int):
        if D < 1:
            raise ValueError("truncation degree must be >= 1")
        self.presentation = pres
        self.D = D
        self._data = _data(pres)
        self._data.extend(D)
        self.size = self._data.offsets[D] + self._data.dims[D - 1]

    def __repr__(self):
        return f"LieAlgebraHandle({self.presentation.ident}, D={self.D})"

    @property
    def ident(self) -> str:
        return self.presentation.ident

    def dims(self) -> list:
        return list(self._data.dims[: self.D])

    def degree(self, idx: int) -> int:
        return self._data.degree_of[idx]

    def basis_word(self, idx: int) -> tuple:
        return self._data.basis_words[idx]

    def degree_range(self, d: int) -> range:
        off = self._data.offsets[d]
        return range(off, off + self._data.dims[d - 1])

    def gen(self, g) -> "LieElement":
        if isinstance(g, str):
            g = parse_generator(g)
        i = self.presentation.index(g)
        # degree-1 basis words are single letters in generator order
        return LieElement(self, {i: Fraction(1)})

    def gens(self) -> list:
        return [self.gen(g) for g in self.presentation.generators]

    def basis_element(self, idx: int) -> "LieElement":
        return LieElement(self, {idx: Fraction(1)})

    def basis_label(self, idx: int) -> str:
        names = [g.name() for g in self.presentation.generators]

        def fmt(w):
            if len(w) == 1:
                return names[w[0]]
            u, v = standard_factorization(w)
            return f"[{fmt(u)},{fmt(v)}]"
        return fmt(self.basis_word(idx))

    def zero(self) -> "LieElement":
        return LieElement(self, {})

    def bracket_basis(self, i: int, j: int) -> dict:
        return self._data.bracket_basis(i, j)

    def truncated(self, D: int) -> "LieAlgebraHandle":
        return build_algebra(self.presentation, D)


@lru_cache(maxsize=None)
def build_algebra(presentation: LiePresentation, max_degree: int) -> LieAlgebraHandle:
    return LieAlgebraHandle(presentation, max_degree)


def _common(a: "LieElement", b: "LieElement") -> LieAlgebraHandle:
    if a.handle is b.handle:
        return a.handle
    if a.handle.presentation != b.handle.presentation:
        raise ValueError(f"elements live in different algebras: {a.handle.ident} vs {b.handle.ident}")
    return a.handle if a.handle.D <= b.handle.D else b.handle


class LieElement:
    __slots__ = ("handle", "coords")

    def __init__(self, handle: LieAlgebraHandle, coords: dict):
        self.handle = handle
        self.coords = {k: Fraction(v) for k, v in coords.items() if v and k < handle.size}

    def __add__(self, other):
        h = _common(self, other)
        c = dict(self.coords)
        axpy(c, 1, other.coords)
        return LieElement(h, c)

    def __sub__(self, other):
        h = _common(self, other)
        c = dict(self.coords)
        axpy(c, -1, other.coords)
        return LieElement(h, c)

    def __neg__(self):
        return LieElement(self.handle, {k: -v for k, v in self.coords.items()})

    def __mul__(self, s):
        s = Fraction(s)
        return LieElement(self.handle, {k: s * v for k, v in self.coords.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        _common(self, other)
        n = min(self.handle.size, other.handle.size)
        return ({k: v for k, v in self.coords.items() if k < n}
                == {k: v for k, v in other.coords.items() if k < n})

    def __hash__(self):
        return hash(frozenset(self.coords.items()))

    def is_zero(self) -> bool:
        return not self.coords

    def component(self, d: int) -> "LieElement":
        h = self.handle
        return LieElement(h, {k: v for k, v in self.coords.items() if h.degree(k) == d})

    def truncate(self, D: int) -> "LieElement":
        h = self.handle.truncated(min(D, self.handle.D))
        return LieElement(h, self.coords)

    def min_degree(self) -> int | None:
        if not self.coords:
            return None
        return min(self.handle.degree(k) for k in self.coords)

    def __repr__(self):
        if not self.coords:
            return "0"
        h = self.handle
        return " + ".join(f"({v})*{h.basis_label(k)}" for k, v in sorted(self.coords.items()))


def bracket(a: LieElement, b: LieElement) -> LieElement:
    h = _common(a, b)
    D = h.D
    out: dict = {}
    for i, x in a.coords.items():
        di = h.degree(i) if i < h.size else D + 1
        for j, y in b.coords.items():
            if j >= h.size or di + h.degree(j) > D:
                continue
            axpy(out, x * y, h.bracket_basis(i, j))
    return LieElement(h, out)


# ------------------------------------------------------------ named elements

def central_element(handle: LieAlgebraHandle) -> LieElement:
    """Sum of all generators of t^Gamma_I (or t_n); central in those algebras."""
    if handle.presentation.family == "free":
        raise ValueError("free Lie algebras on >1 generator have no central element in degree 1")
    return sum(handle.gens(), handle.zero())


# ----------------------------------------------------------------- morphisms

class LieMorphism:
    """Lie morphism determined by images of generators (any degrees >= 1)."""

    def __init__(self, source: LieAlgebraHandle, target: LieAlgebraHandle, images: dict,
                 validate: bool = True):
        self.source = source
        self.target = target
        gens = source.presentation.generators
        self.images = []
        for g in gens:
            img = images.get(g, images.get(g.name()))
            if img is None:
                img = target.zero()
            if img.handle.presentation != target.presentation:
                raise ValueError("generator image lives in the wrong algebra")
            self.images.append(LieElement(target, img.coords))
        self._memo: dict = {}
        if validate:
            self.validate()

    def validate(self) -> None:
        for name, r in self.source.presentation.relations:
            img = self.target.zero()
            for a, b, c in r:
                img = img + c * bracket(self.images[a], self.images[b])
            if not img.is_zero():
                raise ValueError(f"relation {name} does not map to zero: {img!r}")

    def _word_image(self, w: tuple) -> LieElement:
        r = self._memo.get(w)
        if r is None:
            if len(w) == 1:
                r = self.images[w[0]]
            else:
                u, v = standard_factorization(w)
                r = bracket(self._word_image(u), self._word_image(v))
            self._memo[w] = r
        return r

    def __call__(self, a: LieElement) -> LieElement:
        if a.handle.presentation != self.source.presentation:
            raise ValueError("element is not in the morphism's source")
        out: dict = {}
        for k, c in a.coords.items():
            axpy(out, c, self._word_image(a.handle.basis_word(k)).coords)
        return LieElement(self.target, out)


def substitute(morphism: dict, a: LieElement, target: LieAlgebraHandle | None = None,
               validate: bool = True) -> LieElement:
    """Apply the Lie morphism given by generator images to a."""
    if target is None:
        target = next(iter(morphism.values())).handle
    return LieMorphism(a.handle, target, morphism, validate)(a)


# ------------------------------------------- moperadic insertions on t^Gamma

def _require_tgamma(h: LieAlgebraHandle):
    if h.presentation.family not in ("tgamma", "t"):
        raise ValueError("insertion maps are defined on t^Gamma / t presentations")


def insertion_images_i(pres: LiePresentation, i, J, N: int | None = None) -> tuple:
    """Generator images for the insertion of strands J at strand i (as dicts of generators)."""
    N = pres.N if N is None else N
    strands = tuple(pres.strands)
    if i == 0:
        raise ValueError("use the 0-insertion for the frozen strand")
    if i not in strands:
        raise ValueError(f"strand {i} not present")
    J = tuple(J)
    rest = [s for s in strands if s != i]
    if set(J) & set(rest) or len(set(J)) != len(J) or 0 in J:
        raise ValueError("inserted strand names clash")
    new_strands = tuple(sorted(rest + list(J)))
    images = {}
    for g in pres.generators:
        img: dict = {}
        if g.kind == "t0i":
            (j,) = g.indices
            if j != i:
                img[t0(j)] = 1
            else:
                for p in J:
                    img[t0(p)] = 1
                for q, r in itertools.combinations(sorted(J), 2):
                    for c in range(N):
                        img[tij(q, r, c, N)] = img.get(tij(q, r, c, N), 0) + 1
        else:
            j, k = g.indices
            a = g.label
            if i not in (j, k):
                img[tij(j, k, a, N)] = 1
            elif j == i:
                for r in J:
                    img[tij(r, k, a, N)] = 1
            else:
                for r in J:
                    img[tij(j, r, a, N)] = 1
        images[g] = img
    return new_strands, images


def insertion_images_0(pres: LiePresentation, J, N: int | None = None) -> tuple:
    N = pres.N if N is None else N
    strands = tuple(pres.strands)
    J = tuple(J)
    if set(J) & set(strands) or 0 in J:
        raise ValueError("inserted strand names clash")
    new_strands = tuple(sorted(strands + J))
    images = {}
    for g in pres.generators:
        img: dict = {}
        if g.kind == "t0i":
            (i,) = g.indices
            img[t0(i)] = 1
            for j in J:
                for c in range(N):
                    img[tij(j, i, c, N)] = img.get(tij(j, i, c, N), 0) + 1
        else:
            j, k = g.indices
            img[tij(j, k, g.label, N)] = 1
        images[g] = img
    return new_strands, images


def _images_to_elements(target: LieAlgebraHandle, images: dict) -> dict:
    out = {}
    for g, img in images.items():
        e = target.zero()
        for h, c in img.items():
            e = e + c * target.gen(h)
        out[g] = e
    return out


def tgamma_algebra(strands, N: int, D: int, frozen: bool = True) -> LieAlgebraHandle:
    return build_algebra(tgamma_presentation(strands, N, frozen), D)


def mop_compose_i(element: LieElement, i, J) -> LieElement:
    """Insert the strands J at strand i (the partial composition with an inner arity |J|)."""
    h = element.handle
    _require_tgamma(h)
    pres = h.presentation
    new_strands, images = insertion_images_i(pres, i, J)
    target = build_algebra(tgamma_presentation(new_strands, pres.N, pres.family == "tgamma"), h.D)
    return LieMorphism(h, target, _images_to_elements(target, images), validate=False)(element)


def mop_compose_0(outer: LieElement, J) -> LieElement:
    """Insert strands J next to the frozen strand: outer chords to 0 now see J too."""
    h = outer.handle
    if h.presentation.family != "tgamma":
        raise ValueError("0-insertion needs a frozen strand")
    pres = h.presentation
    new_strands, images = insertion_images_0(pres, J)
    target = build_algebra(tgamma_presentation(new_strands, pres.N), h.D)
    return LieMorphism(h, target, _images_to_elements(target, images), validate=False)(outer)


def inner_to_tgamma(element: LieElement, N: int, frozen_target: bool = True) -> LieElement:
    """Classical t_J element viewed in t^Gamma_J via t_pq -> t^0_pq."""
    h = element.handle
    if h.presentation.family != "t":
        raise ValueError("expects a classical t_n element")
    strands = h.presentation.strands
    target = build_algebra(tgamma_presentation(strands, N, frozen_target), h.D)
    images = {g: target.gen(tij(*g.indices, 0, N)) for g in h.presentation.generators}
    return LieMorphism(h, target, images, validate=False)(element)


def embed(element: LieElement, strands, N: int | None = None) -> LieElement:
    """View a t^Gamma_I element inside t^Gamma_{I'} for I a subset of I' (same labels)."""
    h = element.handle
    pres = h.presentation
    N = pres.N if N is None else N
    target = build_algebra(tgamma_presentation(strands, N, pres.family == "tgamma"), h.D)
    images = {g: target.gen(g) for g in pres.generators}
    return LieMorphism(h, target, images, validate=False)(element)


# ------------------------------------------------------------ Gamma action

def gamma_images(pres: LiePresentation, gv: dict) -> dict:
    N = pres.N
    out = {}
    for g in pres.generators:
        if g.kind == "tij_alpha":
            i, j = g.indices
            a = g.label + gv.get(i, 0) - gv.get(j, 0)
            out[g] = {tij(i, j, a, N): 1}
        else:
            out[g] = {g: 1}
    return out


def gamma_act(gv: dict, a: LieElement) -> LieElement:
    """Action of (Z/N)^I: shifting strand i by c sends t^a_{ij} to t^{a+c}_{ij}."""
    h = a.handle
    if h.presentation.family not in ("tgamma", "t"):
        raise ValueError("Gamma acts on t^Gamma presentations")
    imgs = _images_to_elements(h, gamma_images(h.presentation, gv))
    return LieMorphism(h, h, imgs, validate=False)(a)


def relabel(a: LieElement, mapping: dict, target_strands=None) -> LieElement:
    """Rename strands of a t^Gamma / t element (the symmetric-group action)."""
    h = a.handle
    pres = h.presentation
    N = pres.N
    strands = tuple(sorted(mapping.get(s, s) for s in pres.strands)) if target_strands is None else target_strands
    target = build_algebra(tgamma_presentation(strands, N, pres.family == "tgamma"), h.D)
    images = {}
    for g in pres.generators:
        if g.kind == "t0i":
            images[g] = target.gen(t0(mapping.get(g.indices[0], g.indices[0])))
        else:
            i, j = g.indices
            images[g] = target.gen(tij(mapping.get(i, i), mapping.get(j, j), g.label, N))
    return LieMorphism(h, target, images, validate=False)(a)


# --------------------------------------------------------------- serialization

def element_to_json(a: LieElement) -> dict:
    h = a.handle
    coords: dict = {}
    for k, v in sorted(a.coords.items()):
        d = h.degree(k)
        coords.setdefault(str(d), []).append([k - h._data.offsets[d], f"{v.numerator}/{v.denominator}"])
    return {"algebra": h.ident, "coords": coords}


def element_from_json(handle: LieAlgebraHandle, obj: dict) -> LieElement:
    if obj.get("algebra") not in (None, handle.ident):
        raise ValueError(f"element belongs to {obj.get('algebra')}, not {handle.ident}")
    out = {}
    for d, entries in obj["coords"].items():
        off = handle._data.offsets[int(d)]
        for idx, val in entries:
            out[off + idx] = Fraction(val)
    return LieElement(handle, out)
