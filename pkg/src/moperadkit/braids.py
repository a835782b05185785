"""Braid words, exact equality, permutations, linking with the frozen strand, cabling.

Strands are indexed by their starting position 1..n; sigma_i swaps positions
i and i+1 with the positive (R-type) crossing. Equality is decided by the
Artin action of B_n on the free group F_n, which is faithful: two words are
equal iff they send every free generator to the same reduced word.
"""
from __future__ import annotations

import re
from dataclasses import dataclass


def _reduce_concat(*words) -> tuple:
    out: list = []
    for w in words:
        for a in w:
            if out and out[-1] == -a:
                out.pop()
            else:
                out.append(a)
    return tuple(out)


def _inv(w: tuple) -> tuple:
    return tuple(-a for a in reversed(w))


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple = ()  # ((i, +-1), ...) with 1 <= i <= n-1

    def __post_init__(self):
        for i, e in self.letters:
            if not 1 <= i <= self.n - 1 or e not in (1, -1):
                raise ValueError(f"bad letter ({i},{e}) for {self.n} strands")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.n != self.n:
            raise ValueError("strand counts differ")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple((i, -e) for i, e in reversed(self.letters)))

    def shifted(self, offset: int, n: int) -> "BraidWord":
        return BraidWord(n, tuple((i + offset, e) for i, e in self.letters))

    def __str__(self):
        return format_word(self)

    def __len__(self):
        return len(self.letters)


def identity(n: int) -> BraidWord:
    return BraidWord(n, ())


def sigma(i: int, n: int, e: int = 1) -> BraidWord:
    return BraidWord(n, ((i, e),))


def artin_images(b: BraidWord) -> tuple:
    """Images of x_1..x_n under the automorphism of F_n attached to b."""
    T = [(k,) for k in range(1, b.n + 1)]
    for i, e in b.letters:
        a, c = T[i - 1], T[i]
        if e == 1:
            T[i - 1] = _reduce_concat(a, c, _inv(a))
            T[i] = a
        else:
            T[i - 1] = c
            T[i] = _reduce_concat(_inv(c), a, c)
    return tuple(T)


def equal(a: BraidWord, b: BraidWord) -> bool:
    if a.n != b.n:
        return False
    return artin_images(a) == artin_images(b)


def is_identity(a: BraidWord) -> bool:
    return artin_images(a) == tuple((k,) for k in range(1, a.n + 1))


def strand_order(a: BraidWord) -> list:
    """order[p-1] = strand (by start position) at final position p."""
    order = list(range(1, a.n + 1))
    for i, _ in a.letters:
        order[i - 1], order[i] = order[i], order[i - 1]
    return order


def permutation(a: BraidWord) -> dict:
    """Start position -> end position."""
    return {s: p + 1 for p, s in enumerate(strand_order(a))}


def is_pure(a: BraidWord) -> bool:
    return all(s == p + 1 for p, s in enumerate(strand_order(a)))


def linking_numbers(a: BraidWord) -> dict:
    """Signed crossing counts {(s, t): count} for strands s < t (by start position)."""
    order = list(range(1, a.n + 1))
    out: dict = {}
    for i, e in a.letters:
        s, t = order[i - 1], order[i]
        key = (min(s, t), max(s, t))
        out[key] = out.get(key, 0) + e
        order[i - 1], order[i] = t, s
    return out


def elementary_pure(i: int, j: int, n: int) -> BraidWord:
    """x_ij = s_{j-1}..s_{i+1} s_i^2 s_{i+1}^-1..s_{j-1}^-1."""
    if not 1 <= i < j <= n:
        raise ValueError(f"bad indices for x_{i}{j} in B_{n}")
    up = [(k, 1) for k in range(j - 1, i, -1)]
    down = [(k, -1) for k in range(i + 1, j)]
    return BraidWord(n, tuple(up + [(i, 1), (i, 1)] + down))


def block_cross(a: int, b: int) -> BraidWord:
    """Positive half twist of a left block of a strands past a right block of b strands."""
    letters = []
    for j in range(b):
        letters += [(k, 1) for k in range(a + j, j, -1)]
    return BraidWord(a + b, tuple(letters))


def full_twist(k: int) -> BraidWord:
    """Delta^2 on k strands."""
    return BraidWord(k, tuple((i, 1) for i in range(1, k)) * k)


def cable(a: BraidWord, i: int, m: int) -> BraidWord:
    """Replace strand i (by start position) with m parallel strands; m = 0 deletes it."""
    if not 1 <= i <= a.n or m < 0:
        raise ValueError("bad cabling data")
    n2 = a.n + m - 1
    order = list(range(1, a.n + 1))
    width = lambda s: m if s == i else 1
    letters: list = []
    for p, e in a.letters:
        s, t = order[p - 1], order[p]
        off = sum(width(x) for x in order[: p - 1])
        ws, wt = width(s), width(t)
        if ws and wt:
            if e == 1:
                blk = block_cross(ws, wt)
            else:
                blk = block_cross(wt, ws).inverse()
            letters += [(k + off, f) for k, f in blk.letters]
        order[p - 1], order[p] = t, s
    return BraidWord(n2, tuple(letters))


# ------------------------------------------------------------------ annular

@dataclass(frozen=True)
class AnnularBraidWord:
    """Braid on strands 0..n with the frozen strand 0 leftmost; generators s_0..s_{n-1}."""
    n: int
    letters: tuple = ()

    def __post_init__(self):
        for i, e in self.letters:
            if not 0 <= i <= self.n - 1 or e not in (1, -1):
                raise ValueError(f"bad annular letter ({i},{e})")
        if permutation(self.full())[1] != 1:
            raise ValueError("annular braids must fix the frozen strand")

    def full(self) -> BraidWord:
        return BraidWord(self.n + 1, tuple((i + 1, e) for i, e in self.letters))

    @classmethod
    def from_full(cls, b: BraidWord) -> "AnnularBraidWord":
        return cls(b.n - 1, tuple((i - 1, e) for i, e in b.letters))

    def __mul__(self, other):
        return AnnularBraidWord(self.n, self.letters + other.letters)

    def inverse(self):
        return AnnularBraidWord.from_full(self.full().inverse())

    def __str__(self):
        return format_word(self)


def annular_elementary(i: int, j: int, n: int) -> AnnularBraidWord:
    """x_ij on strands 0..n (0 <= i < j <= n)."""
    return AnnularBraidWord.from_full(elementary_pure(i + 1, j + 1, n + 1))


def linking_with_zero(a) -> tuple:
    """Per-strand count of full turns around strand 0 (strands 1..n by start position)."""
    full = a.full() if isinstance(a, AnnularBraidWord) else a
    lk = linking_numbers(full)
    out = []
    for s in range(2, full.n + 1):
        c = lk.get((1, s), 0)
        if c % 2:
            raise ValueError("strand does not return around the frozen strand")
        out.append(c // 2)
    return tuple(out)


def in_pure_gamma(a, N: int) -> bool:
    """Membership in PB^Gamma: pure and every linking with 0 divisible by N."""
    full = a.full() if isinstance(a, AnnularBraidWord) else a
    return is_pure(full) and all(c % N == 0 for c in linking_with_zero(full))


# ---------------------------------------------------------------- text format

_TOKEN = re.compile(r"^s(\d+)(?:\^(-?1))?$")


def parse_word(text: str, n: int, annular: bool = False):
    letters = []
    for tok in text.split():
        mt = _TOKEN.match(tok)
        if not mt:
            raise ValueError(f"bad braid token {tok!r}")
        letters.append((int(mt.group(1)), int(mt.group(2) or 1)))
    return AnnularBraidWord(n, tuple(letters)) if annular else BraidWord(n, tuple(letters))


def format_word(b) -> str:
    return " ".join(f"s{i}" if e == 1 else f"s{i}^-1" for i, e in b.letters)
