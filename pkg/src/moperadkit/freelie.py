"""Free Lie algebras in the Lyndon basis, realized inside the tensor algebra.

Letters are integers ``0..k-1``; words are tuples. A Lie polynomial is a dict
``{word: Fraction}``. The Lyndon bracket ``P_w`` has leading word ``w``: every
other word in its expansion is lexicographically larger, which is what makes
coordinate extraction a simple peel-off loop.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .linalg import axpy


def lyndon_words(k: int, max_len: int) -> list:
    """All Lyndon words over ``range(k)`` of length <= max_len, in lex order (Duval)."""
    out = []
    if k == 0 or max_len == 0:
        return out
    w = [-1]
    while w:
        w[-1] += 1
        out.append(tuple(w))
        m = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()
    return out


def is_lyndon(w: tuple) -> bool:
    n = len(w)
    return n > 0 and all(w < w[i:] + w[:i] for i in range(1, n))


def standard_factorization(w: tuple) -> tuple:
    """w = u v with v the longest proper Lyndon suffix."""
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ValueError(f"{w} has no standard factorization")


def poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for u, cu in a.items():
        for v, cv in b.items():
            w = u + v
            s = out.get(w, 0) + cu * cv
            if s:
                out[w] = s
            else:
                out.pop(w)
    return out


def poly_bracket(a: dict, b: dict) -> dict:
    out = poly_mul(a, b)
    axpy(out, -1, poly_mul(b, a))
    return out


class FreeLie:
    """Lyndon-basis bookkeeping for the free Lie algebra on k letters."""

    def __init__(self, k: int):
        self.k = k
        self.words_by_degree: dict = {}
        self.col: dict = {}  # word -> column within its degree
        self._expansion: dict = {}
        self._ad_gen: dict = {}

    def words(self, d: int) -> list:
        if d not in self.words_by_degree:
            ws = [w for w in lyndon_words(self.k, d) if len(w) == d]
            self.words_by_degree[d] = ws
            for i, w in enumerate(ws):
                self.col[w] = i
        return self.words_by_degree[d]

    def expansion(self, w: tuple) -> dict:
        """Tensor expansion of the standard bracketing P_w."""
        e = self._expansion.get(w)
        if e is None:
            if len(w) == 1:
                e = {w: Fraction(1)}
            else:
                u, v = standard_factorization(w)
                e = poly_bracket(self.expansion(u), self.expansion(v))
            self._expansion[w] = e
        return e

    def coords(self, poly: dict) -> dict:
        """Lyndon coordinates ``{word: coef}`` of a homogeneous Lie polynomial."""
        p = dict(poly)
        out = {}
        while p:
            w = min(p)
            c = p[w]
            if w not in self.col:
                self.words(len(w))
                if w not in self.col:
                    raise ValueError(f"not a Lie polynomial: leading word {w} is not Lyndon")
            out[w] = c
            axpy(p, -c, self.expansion(w))
        return out

    def to_poly(self, coords: dict) -> dict:
        out: dict = {}
        for w, c in coords.items():
            axpy(out, c, self.expansion(w))
        return out

    def bracket_words(self, u: tuple, v: tuple) -> dict:
        return self.coords(poly_bracket(self.expansion(u), self.expansion(v)))

    def ad_gen(self, g: int, w: tuple) -> dict:
        """Lyndon coordinates of [g, P_w]."""
        key = (g, w)
        r = self._ad_gen.get(key)
        if r is None:
            r = self.bracket_words((g,), w)
            self._ad_gen[key] = r
        return r


@lru_cache(maxsize=None)
def free_lie(k: int) -> FreeLie:
    return FreeLie(k)


def witt(k: int, d: int) -> int:
    """Dimension of the degree-d part of the free Lie algebra on k generators."""
    def mobius(n):
        res, p, m = 1, 2, n
        while p * p <= m:
            if m % p == 0:
                m //= p
                if m % p == 0:
                    return 0
                res = -res
            p += 1
        if m > 1:
            res = -res
        return res
    return sum(mobius(e) * k ** (d // e) for e in range(1, d + 1) if d % e == 0) // d
