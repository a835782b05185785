"""Parenthesized (labelled) braids: objects, generator words, composition, evaluation.

Objects are binary trees over distinct leaf names, the frozen leaf being 0.
Morphism words are sequences of generator instances R, Rtilde, Phi, E, Psi,
each acting on the subtree spanned by its blocks. Words compose left to right
(the first letter is applied first). Equality of morphisms is decided by
evaluating to braids: same endpoints, equal braids.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import braids
from .braids import BraidWord, AnnularBraidWord

HEADS = ("R", "Rtilde", "Phi", "E", "Psi")
ARITY = {"R": 2, "Rtilde": 2, "Phi": 3, "Psi": 3, "E": 2}


# ------------------------------------------------------------------ objects

@dataclass(frozen=True)
class Leaf:
    name: int
    label: int | None = None

    def __str__(self):
        return str(self.name) if self.label is None else f"{self.name}_{self.label}"


def _leaves(t) -> list:
    if isinstance(t, Leaf):
        return [t]
    return _leaves(t[0]) + _leaves(t[1])


def _names(t) -> tuple:
    return tuple(l.name for l in _leaves(t))


def _fmt(t) -> str:
    if isinstance(t, Leaf):
        return str(t)
    return f"({_fmt(t[0])} {_fmt(t[1])})"


@dataclass(frozen=True)
class ParObject:
    tree: object
    N: int | None = None  # modulus of the labels, None when unlabelled

    def __post_init__(self):
        names = self.names()
        if len(set(names)) != len(names):
            raise ValueError(f"repeated leaves in {names}")
        if 0 in names and names[0] != 0:
            raise ValueError("the frozen leaf 0 must be leftmost")
        for l in _leaves(self.tree):
            if self.N is not None and l.name != 0:
                if l.label is None:
                    raise ValueError("labelled objects need a label on every non-frozen leaf")
                if not 0 <= l.label < self.N:
                    raise ValueError("label out of range")

    def names(self) -> tuple:
        return _names(self.tree)

    def labels(self) -> dict:
        return {l.name: l.label for l in _leaves(self.tree) if l.name != 0}

    @property
    def frozen(self) -> bool:
        return 0 in self.names()

    def __str__(self):
        return _fmt(self.tree)

    def with_labels(self, labels: dict, N: int | None = None) -> "ParObject":
        N = self.N if N is None else N

        def go(t):
            if isinstance(t, Leaf):
                if t.name == 0:
                    return Leaf(0)
                return Leaf(t.name, labels.get(t.name, t.label) % N if N else None)
            return (go(t[0]), go(t[1]))
        return ParObject(go(self.tree), N)

    def shift_labels(self, gv: dict) -> "ParObject":
        if self.N is None:
            return self
        lab = self.labels()
        return self.with_labels({k: (v + gv.get(k, 0)) % self.N for k, v in lab.items()})


_TOK = re.compile(r"\(|\)|[^\s()]+")


def parse_object(text: str, N: int | None = None) -> ParObject:
    toks = _TOK.findall(text)
    pos = 0

    def leaf(tok):
        if "_" in tok:
            a, b = tok.split("_")
            return Leaf(int(a), int(b))
        return Leaf(int(tok))

    def parse():
        nonlocal pos
        tok = toks[pos]
        pos += 1
        if tok == "(":
            left = parse()
            right = parse()
            if toks[pos] != ")":
                raise ValueError(f"expected ')' in {text!r}")
            pos += 1
            return (left, right)
        if tok == ")":
            raise ValueError(f"unexpected ')' in {text!r}")
        return leaf(tok)
    try:
        tree = parse()
    except IndexError:
        raise ValueError(f"unbalanced parentheses in {text!r}") from None
    if pos != len(toks):
        raise ValueError(f"trailing tokens in {text!r}")
    if N is None and any(l.label is not None for l in _leaves(tree)):
        raise ValueError("labels given without a modulus N")
    return ParObject(tree, N)


def _find(t, names: tuple, path=()):
    """Path to the subtree whose leaf sequence is exactly `names`."""
    here = _names(t)
    if here == names:
        return path
    if isinstance(t, Leaf):
        return None
    n0 = len(_names(t[0]))
    if set(names) <= set(here[:n0]):
        return _find(t[0], names, path + (0,))
    if set(names) <= set(here[n0:]):
        return _find(t[1], names, path + (1,))
    return None


def _get(t, path):
    for p in path:
        t = t[p]
    return t


def _put(t, path, new):
    if not path:
        return new
    if path[0] == 0:
        return (_put(t[0], path[1:], new), t[1])
    return (t[0], _put(t[1], path[1:], new))


# ---------------------------------------------------------------- generators

@dataclass(frozen=True)
class GenInstance:
    head: str
    blocks: tuple  # tuple of tuples of leaf names
    exp: int = 1
    shift: tuple | None = None  # declared labels of the block leaves (checked when given)

    def __post_init__(self):
        if self.head not in HEADS:
            raise ValueError(f"unknown generator {self.head}")
        if len(self.blocks) != ARITY[self.head]:
            raise ValueError(f"{self.head} takes {ARITY[self.head]} blocks")
        if self.exp not in (1, -1):
            raise ValueError("exponent must be +-1")
        if self.head in ("E", "Psi") and 0 not in self.blocks[0]:
            raise ValueError(f"{self.head} needs the frozen leaf in its first block")

    def inverse(self) -> "GenInstance":
        return GenInstance(self.head, self.blocks, -self.exp)

    def __str__(self):
        b = ",".join("".join(str(x) for x in blk) for blk in self.blocks)
        e = "" if self.exp == 1 else "^-1"
        return f"{self.head}^{{{b}}}{e}"


def _pattern(g: GenInstance):
    A = g.blocks
    if g.head in ("Phi", "Psi"):
        a, b, c = A
        return a + b + c, ((a, b), c) if g.exp == 1 else (a, (b, c))
    if g.head in ("R", "Rtilde"):
        a, b = A
        return (a + b, (a, b)) if g.exp == 1 else (b + a, (b, a))
    p, a = A
    return p + a, (p, a)


def _matches(t, shape) -> bool:
    if isinstance(shape, tuple) and len(shape) == 2 and isinstance(shape[0], tuple) and not all(
            isinstance(x, int) for x in shape):
        if isinstance(t, Leaf):
            return False
        return _matches(t[0], shape[0]) and _matches(t[1], shape[1])
    return _names(t) == tuple(shape)


def apply_generator(g: GenInstance, obj: ParObject) -> tuple:
    """Return (target object, offset of the acted subtree, subtree)."""
    span, shape = _pattern(g)
    path = _find(obj.tree, span)
    if path is None:
        raise ValueError(f"{g} does not apply to {obj}: no subtree on {span}")
    sub = _get(obj.tree, path)
    if not _matches(sub, shape):
        raise ValueError(f"{g} does not apply to {obj}: wrong parenthesization")
    if g.shift is not None:
        lab = obj.labels()
        seen = tuple(lab.get(x) for blk in g.blocks for x in blk if x != 0)
        if seen != tuple(g.shift):
            raise ValueError(f"{g} declared labels {g.shift} but the object has {seen}")
    if g.head in ("Phi", "Psi"):
        if g.exp == 1:
            new = (sub[0][0], (sub[0][1], sub[1]))
        else:
            new = ((sub[0], sub[1][0]), sub[1][1])
    elif g.head in ("R", "Rtilde"):
        new = (sub[1], sub[0])
    else:
        if obj.N is None:
            new = sub
        else:
            bump = {x: g.exp for x in g.blocks[1]}
            new = ParObject(sub, obj.N).shift_labels(bump).tree
    offset = obj.names().index(span[0])
    return ParObject(_put(obj.tree, path, new), obj.N), offset


def generator_braid(g: GenInstance, n: int, offset: int) -> BraidWord:
    """Braid of one letter on n strands acting at the given offset."""
    if g.head in ("Phi", "Psi"):
        return braids.identity(n)
    if g.head in ("R", "Rtilde"):
        a, b = (len(x) for x in g.blocks)
        if g.head == "R":
            w = braids.block_cross(a, b)
        else:
            w = braids.block_cross(b, a).inverse()
        if g.exp == -1:
            w = w.inverse()
        return w.shifted(offset, n)
    p, a = (len(x) for x in g.blocks)
    w = braids.full_twist(p + a) * braids.full_twist(p).shifted(0, p + a).inverse()
    if g.exp == -1:
        w = w.inverse()
    return w.shifted(offset, n)


# ------------------------------------------------------------------- words

@dataclass(frozen=True)
class MorWord:
    source: ParObject
    letters: tuple = ()

    def __post_init__(self):
        self.objects()  # validates composability

    def objects(self) -> list:
        objs = self.__dict__.get("_objs")
        if objs is None:
            objs = [self.source]
            offs = []
            cur = self.source
            for g in self.letters:
                cur, off = apply_generator(g, cur)
                objs.append(cur)
                offs.append(off)
            object.__setattr__(self, "_objs", objs)
            object.__setattr__(self, "_offs", offs)
        return objs

    @property
    def target(self) -> ParObject:
        return self.objects()[-1]

    def __str__(self):
        body = " ".join(str(g) for g in self.letters) or "Id"
        return f"{body} : {self.source} -> {self.target}"


def generator(head: str, source, blocks, exp: int = 1, gamma_shift=None) -> MorWord:
    if isinstance(source, str):
        source = parse_object(source)
    blocks = tuple(tuple(b) for b in blocks)
    return MorWord(source, (GenInstance(head, blocks, exp, gamma_shift),))


def identity_word(obj: ParObject) -> MorWord:
    return MorWord(obj, ())


def compose(a: MorWord, b: MorWord) -> MorWord:
    """a then b."""
    if a.target != b.source:
        raise ValueError(f"cannot compose: {a.target} != {b.source}")
    return MorWord(a.source, a.letters + b.letters)


def invert(a: MorWord) -> MorWord:
    return MorWord(a.target, tuple(g.inverse() for g in reversed(a.letters)))


def word(source, *letters) -> MorWord:
    """Build a word from (head, blocks[, exp[, shift]]) tuples applied in order."""
    if isinstance(source, str):
        source = parse_object(source)
    gs = []
    for spec in letters:
        head, blocks, *rest = spec
        exp = rest[0] if rest else 1
        shift = tuple(rest[1]) if len(rest) > 1 else None
        gs.append(GenInstance(head, tuple(tuple(b) for b in blocks), exp, shift))
    return MorWord(source, tuple(gs))


def evaluate_to_braid(a: MorWord):
    """Functor to braids (annular braid when the frozen leaf is present)."""
    a.objects()
    n = len(a.source.names())
    w = braids.identity(n)
    for g, off in zip(a.letters, a._offs):
        w = w * generator_braid(g, n, off)
    if a.source.frozen:
        return AnnularBraidWord.from_full(w)
    return w


def _full(b):
    return b.full() if isinstance(b, AnnularBraidWord) else b


def equal_morphisms(a: MorWord, b: MorWord) -> bool:
    if (a.source.N is None) != (b.source.N is None) or a.source.frozen != b.source.frozen:
        raise ValueError("morphisms of different flavors")
    if a.source != b.source or a.target != b.target:
        return False
    return braids.equal(_full(evaluate_to_braid(a)), _full(evaluate_to_braid(b)))


def gamma_weight(a: MorWord, N: int) -> dict:
    """Per-strand count of E-letters mod N (strand -> class)."""
    if a.source.names() != a.target.names() or _strip(a.source) != _strip(a.target):
        raise ValueError("gamma_weight needs an endomorphism")
    out = {x: 0 for x in a.source.names() if x != 0}
    for g in a.letters:
        if g.head == "E":
            for x in g.blocks[1]:
                out[x] += g.exp
    return {k: v % N for k, v in out.items()}


def linking_weight(a: MorWord, N: int) -> dict:
    """Linking with the frozen strand of the braid evaluation, per leaf, mod N."""
    lk = braids.linking_with_zero(evaluate_to_braid(a))
    names = a.source.names()[1:]
    return {x: c % N for x, c in zip(names, lk)}


def _strip(obj: ParObject):
    def go(t):
        if isinstance(t, Leaf):
            return t.name
        return (go(t[0]), go(t[1]))
    return go(obj.tree)


def gamma_act_word(gv: dict, a: MorWord) -> MorWord:
    """Gamma-translate: shift the source labels; letters are re-located on the shifted objects."""
    return MorWord(a.source.shift_labels(gv), tuple(GenInstance(g.head, g.blocks, g.exp) for g in a.letters))


# ------------------------------------------------------ deletion and insertion

def _drop_leaf(t, name):
    if isinstance(t, Leaf):
        return None if t.name == name else t
    l, r = _drop_leaf(t[0], name), _drop_leaf(t[1], name)
    if l is None:
        return r
    if r is None:
        return l
    return (l, r)


def delete_strand(a: MorWord, name) -> MorWord:
    """Image under the deletion of one non-frozen strand; letters with an empty block vanish."""
    if name == 0:
        raise ValueError("the frozen strand cannot be deleted")
    src = ParObject(_drop_leaf(a.source.tree, name), a.source.N)
    out = []
    for g in a.letters:
        blocks = tuple(tuple(x for x in b if x != name) for b in g.blocks)
        if all(blocks):
            out.append(GenInstance(g.head, blocks, g.exp))
    return MorWord(src, tuple(out))


def _rename_tree(t, ren, label_of=None):
    if isinstance(t, Leaf):
        return Leaf(ren(t.name), t.label if label_of is None else label_of(t))
    return (_rename_tree(t[0], ren, label_of), _rename_tree(t[1], ren, label_of))


def _renamers_i(i: int, m: int):
    outer = lambda j: j if j < i else (j + m - 1 if j > i else None)
    inner = lambda k: i + k - 1
    return outer, inner


def obj_compose_i(outer: ParObject, i: int, inner: ParObject) -> ParObject:
    """Substitute the (unlabelled, leaves 1..m) object `inner` for leaf i; labels broadcast."""
    m = len(inner.names())
    if inner.frozen:
        raise ValueError("inner object of a partial composition must not be frozen")
    if sorted(inner.names()) != list(range(1, m + 1)):
        raise ValueError("inner object must have leaves 1..m")
    ren_o, ren_i = _renamers_i(i, m)
    lab = outer.labels().get(i) if outer.N is not None else None
    path = _find(outer.tree, (i,))
    if path is None:
        raise ValueError(f"leaf {i} not in {outer}")
    new_inner = _rename_tree(inner.tree, ren_i, lambda l: lab)
    t = _put(outer.tree, path, new_inner)

    # rename outer leaves only; the inner subtree is already renamed
    def walk(t, p):
        if p == path[: len(p)] and len(p) == len(path):
            return t
        if isinstance(t, Leaf):
            return Leaf(ren_o(t.name), t.label)
        return (walk(t[0], p + (0,)), walk(t[1], p + (1,)))
    return ParObject(walk(t, ()), outer.N)


def obj_compose_0(outer: ParObject, inner: ParObject) -> ParObject:
    """Splice the frozen object `inner` (leaves 0..m) at the frozen leaf of `outer`."""
    if not outer.frozen or not inner.frozen:
        raise ValueError("0-composition needs frozen leaves on both sides")
    m = len(inner.names()) - 1
    path = _find(outer.tree, (0,))

    def walk(t, p):
        if p == path:
            return inner.tree
        if isinstance(t, Leaf):
            return Leaf(t.name + m, t.label)
        return (walk(t[0], p + (0,)), walk(t[1], p + (1,)))
    N = outer.N if outer.N is not None else inner.N
    return ParObject(walk(outer.tree, ()), N)


def _expand_blocks(g: GenInstance, ren, leaf, replacement) -> GenInstance:
    blocks = []
    for b in g.blocks:
        nb = []
        for x in b:
            if x == leaf:
                nb.extend(replacement)
            else:
                nb.append(ren(x))
        blocks.append(tuple(nb))
    return GenInstance(g.head, tuple(blocks), g.exp)


def mor_compose_i(outer: MorWord, i: int, inner: MorWord) -> MorWord:
    m = len(inner.source.names())
    ren_o, ren_i = _renamers_i(i, m)
    src = obj_compose_i(outer.source, i, inner.source)
    repl = tuple(ren_i(x) for x in inner.source.names())
    first = tuple(_expand_blocks(g, ren_o, i, repl) for g in outer.letters)
    second = tuple(GenInstance(g.head, tuple(tuple(ren_i(x) for x in b) for b in g.blocks), g.exp)
                   for g in inner.letters)
    return MorWord(src, first + second)


def mor_compose_0(outer: MorWord, inner: MorWord) -> MorWord:
    m = len(inner.source.names()) - 1
    src = obj_compose_0(outer.source, inner.source)
    repl = inner.source.names()
    first = tuple(_expand_blocks(g, lambda j: j + m, 0, repl) for g in outer.letters)
    return MorWord(src, first + inner.letters)


# -------------------------------------------------------- relation catalogue

PAB_TAGS = ("U", "H1", "H2", "P")
PAB1_TAGS = ("cU", "MP", "RP", "O")
PABGAMMA_TAGS = ("tU", "tMP", "tRP", "tO")
ALL_TAGS = PAB_TAGS + PAB1_TAGS + PABGAMMA_TAGS


def _obj(text, N):
    return parse_object(text, N)


def relation_sides(tag: str, N: int = 1) -> list:
    """Pairs (lhs, rhs) of morphism words whose equality is the relation."""
    if tag == "U":
        phi = word("((1 2) 3)", ("Phi", ((1,), (2,), (3,))))
        return [(delete_strand(phi, k), identity_word(delete_strand(phi, k).source)) for k in (1, 2, 3)]
    if tag in ("H1", "H2"):
        R = "R" if tag == "H1" else "Rtilde"
        lhs = word("((1 2) 3)", (R, ((1,), (2,))), ("Phi", ((2,), (1,), (3,))), (R, ((1,), (3,))))
        rhs = word("((1 2) 3)", ("Phi", ((1,), (2,), (3,))), (R, ((1,), (2, 3))), ("Phi", ((2,), (3,), (1,))))
        return [(lhs, rhs)]
    if tag == "P":
        src = "(((1 2) 3) 4)"
        lhs = word(src, ("Phi", ((1, 2), (3,), (4,))), ("Phi", ((1,), (2,), (3, 4))))
        rhs = word(src, ("Phi", ((1,), (2,), (3,))), ("Phi", ((1,), (2, 3), (4,))), ("Phi", ((2,), (3,), (4,))))
        return [(lhs, rhs)]
    labelled = tag.startswith("t")
    M = N if labelled else None
    lb = (lambda s: s) if labelled else (lambda s: re.sub(r"_\d+", "", s))
    if tag in ("cU", "tU"):
        psi = MorWord(_obj(lb("((0 1_0) 2_0)"), M), (GenInstance("Psi", ((0,), (1,), (2,))),))
        out = []
        for k in (1, 2):
            d = delete_strand(psi, k)
            out.append((d, identity_word(d.source)))
        return out
    if tag in ("MP", "tMP"):
        src = _obj(lb("(((0 1_0) 2_0) 3_0)"), M)
        lhs = MorWord(src, (GenInstance("Psi", ((0, 1), (2,), (3,))), GenInstance("Psi", ((0,), (1,), (2, 3)))))
        rhs = MorWord(src, (GenInstance("Psi", ((0,), (1,), (2,))), GenInstance("Psi", ((0,), (1, 2), (3,))),
                            GenInstance("Phi", ((1,), (2,), (3,)))))
        return [(lhs, rhs)]
    if tag in ("RP", "tRP"):
        src = _obj(lb("((0 1_0) 2_0)"), M)
        sh = (lambda *x: tuple(x)) if labelled else (lambda *x: None)
        lhs = MorWord(src, (GenInstance("Psi", ((0,), (1,), (2,)), 1, sh(0, 0)),
                            GenInstance("E", ((0,), (1, 2)), 1, sh(0, 0)),
                            GenInstance("Psi", ((0,), (1,), (2,)), -1, sh(1 % N, 1 % N))))
        rhs = MorWord(src, (GenInstance("E", ((0,), (1,)), 1, sh(0)),
                            GenInstance("E", ((0, 1), (2,)), 1, sh(1 % N, 0))))
        return [(lhs, rhs)]
    if tag in ("O", "tO"):
        src = _obj(lb("((0 1_0) 2_0)"), M)
        sh = (lambda *x: tuple(x)) if labelled else (lambda *x: None)
        one = 1 % N
        lhs = MorWord(src, (GenInstance("E", ((0, 1), (2,)), 1, sh(0, 0)),))
        rhs = MorWord(src, (
            GenInstance("Psi", ((0,), (1,), (2,)), 1, sh(0, 0)),
            GenInstance("R", ((1,), (2,)), 1, sh(0, 0)),
            GenInstance("Psi", ((0,), (2,), (1,)), -1, sh(0, 0)),
            GenInstance("E", ((0,), (2,)), 1, sh(0)),
            GenInstance("Psi", ((0,), (2,), (1,)), 1, sh(one, 0)),
            GenInstance("R", ((2,), (1,)), 1, sh(one, 0)),
            GenInstance("Psi", ((0,), (1,), (2,)), -1, sh(0, one)),
        ))
        return [(lhs, rhs)]
    raise ValueError(f"unknown relation tag {tag!r}")


@dataclass
class RelationReport:
    tag: str
    N: int
    passed: bool
    details: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"id": f"{self.tag}" + (f"[N={self.N}]" if self.tag.startswith("t") else ""),
                "status": "pass" if self.passed else "fail", "details": self.details}


def check_relation(tag: str, N: int = 1) -> RelationReport:
    ok = True
    details = []
    for lhs, rhs in relation_sides(tag, N):
        same = equal_morphisms(lhs, rhs)
        bl, br = evaluate_to_braid(lhs), evaluate_to_braid(rhs)
        ok = ok and same
        details.append({"source": str(lhs.source), "lhs_target": str(lhs.target),
                        "rhs_target": str(rhs.target), "lhs_braid": str(bl), "rhs_braid": str(br),
                        "equal": same})
    return RelationReport(tag, N, ok, details)


def suite_tags(which: str) -> tuple:
    return {"pab": PAB_TAGS, "pab1": PAB1_TAGS, "pabgamma": PABGAMMA_TAGS}[which]


# ------------------------------------------------------------ JSON

def word_to_json(a: MorWord) -> dict:
    return {"source": str(a.source), "N": a.source.N,
            "letters": [{"head": g.head, "blocks": [list(b) for b in g.blocks], "exp": g.exp,
                         "shift": list(g.shift) if g.shift is not None else None} for g in a.letters]}


def word_from_json(obj: dict) -> MorWord:
    src = parse_object(obj["source"], obj.get("N"))
    return MorWord(src, tuple(GenInstance(d["head"], tuple(tuple(b) for b in d["blocks"]), d.get("exp", 1),
                                          tuple(d["shift"]) if d.get("shift") is not None else None)
                              for d in obj["letters"]))


# ------------------------------------------------------------------ sampling

def _nodes(t, path=()):
    if isinstance(t, Leaf):
        return
    yield path, t
    yield from _nodes(t[0], path + (0,))
    yield from _nodes(t[1], path + (1,))


def applicable_moves(obj: ParObject, with_twists: bool = True) -> list:
    """Every generator letter that applies to obj."""
    out = []
    for _, t in _nodes(obj.tree):
        left, right = _names(t[0]), _names(t[1])
        if 0 not in left:
            for head in ("R", "Rtilde"):
                out.append(GenInstance(head, (left, right), 1))
                out.append(GenInstance(head, (right, left), -1))
        head = "Psi" if 0 in left else "Phi"
        if 0 in left or 0 not in right:
            if not isinstance(t[0], Leaf):
                out.append(GenInstance(head, (_names(t[0][0]), _names(t[0][1]), right), 1))
            if not isinstance(t[1], Leaf):
                out.append(GenInstance(head, (left, _names(t[1][0]), _names(t[1][1])), -1))
        if with_twists and obj.N is not None and 0 in left:
            out.append(GenInstance("E", (left, right), 1))
            out.append(GenInstance("E", (left, right), -1))
    return out


def path_back(start: ParObject, goal: ParObject) -> tuple:
    """Shortest letter sequence (no twists) from start to an object with goal's unlabelled shape."""
    target = _strip(goal)
    seen = {_strip(start)}
    frontier = [(start, ())]
    while frontier:
        nxt = []
        for obj, letters in frontier:
            if _strip(obj) == target:
                return letters
            for g in applicable_moves(obj, with_twists=False):
                new, _ = apply_generator(g, obj)
                key = _strip(new)
                if key not in seen:
                    seen.add(key)
                    nxt.append((new, letters + (g,)))
        frontier = nxt
    raise ValueError("goal shape is unreachable")


def random_object(n: int, N: int | None, rng) -> ParObject:
    leaves = list(range(1, n + 1))
    rng.shuffle(leaves)
    items = [Leaf(0)] + [Leaf(x, None if N is None else rng.randrange(N)) for x in leaves]
    while len(items) > 1:
        k = rng.randrange(len(items) - 1)
        items[k:k + 2] = [(items[k], items[k + 1])]
    return ParObject(items[0], N)


def random_endomorphism(n: int, N: int, max_length: int, rng) -> MorWord:
    """Random walk followed by the shortest way back to the starting shape, at most max_length letters."""
    src = random_object(n, N, rng)
    while True:
        k = rng.randint(0, max_length)
        cur, letters = src, []
        for _ in range(k):
            g = rng.choice(applicable_moves(cur))
            cur, _ = apply_generator(g, cur)
            letters.append(g)
        back = path_back(cur, src)
        if len(letters) + len(back) <= max_length:
            return MorWord(src, tuple(letters) + back)
