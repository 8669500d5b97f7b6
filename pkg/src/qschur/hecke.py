"""Iwahori-Hecke algebra H_d of type A_{d-1} over Q(q) in the T_w basis.

The quadratic relation is (T_i - q)(T_i + q^-1) = 0, so
T_w T_i = T_{w s_i} when the length goes up and
T_w T_i = T_{w s_i} + (q - q^-1) T_w otherwise.

The same container doubles as the group algebra Q S_d when ``mode`` is
``"classical"``; there T_w T_i = T_{w s_i} always.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .permutations import Permutation, _unsafe, reduced_word, shift_up as _perm_shift
from .qfield import ONE, Q, QINV, as_ratfunc

__all__ = [
    "HeckeElement", "mul_basis_by_generator", "mul", "generator_power",
    "shift_up", "basis_element", "generator", "MODES",
]

MODES = ("quantum", "classical")
Q_MINUS_QINV = Q - QINV


def _check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    return mode


class HeckeElement:
    """Finite linear combination of T_w, w in S_rank, with RatFunc coefficients."""

    __slots__ = ("terms", "rank", "mode")

    def __init__(self, terms: Mapping[Permutation, object], rank: int,
                 mode: str = "quantum"):
        clean = {}
        for w, c in terms.items():
            c = as_ratfunc(c)
            if w.rank != rank:
                w = w.widen(rank)
            if c:
                clean[w] = clean[w] + c if w in clean else c
                if not clean[w]:
                    del clean[w]
        self.terms = clean
        self.rank = rank
        self.mode = _check_mode(mode)

    @classmethod
    def _raw(cls, terms: dict, rank: int, mode: str) -> "HeckeElement":
        obj = object.__new__(cls)
        obj.terms = terms
        obj.rank = rank
        obj.mode = mode
        return obj

    @classmethod
    def one(cls, rank: int, mode: str = "quantum") -> "HeckeElement":
        return cls._raw({Permutation.identity(rank): ONE}, rank, mode)

    @classmethod
    def zero(cls, rank: int, mode: str = "quantum") -> "HeckeElement":
        return cls._raw({}, rank, mode)

    def widen(self, rank: int) -> "HeckeElement":
        if rank == self.rank:
            return self
        if rank < self.rank:
            raise ValueError(f"cannot narrow rank {self.rank} to {rank}")
        return HeckeElement._raw({w.widen(rank): c for w, c in self.terms.items()},
                                 rank, self.mode)

    def _align(self, other: "HeckeElement"):
        if self.mode != other.mode:
            raise ValueError("mode mismatch")
        n = max(self.rank, other.rank)
        return self.widen(n), other.widen(n)

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        a, b = self._align(other)
        out = dict(a.terms)
        for w, c in b.terms.items():
            s = out[w] + c if w in out else c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return HeckeElement._raw(out, a.rank, a.mode)

    def __neg__(self):
        return HeckeElement._raw({w: -c for w, c in self.terms.items()},
                                 self.rank, self.mode)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        c = as_ratfunc(c)
        if not c:
            return HeckeElement.zero(self.rank, self.mode)
        return HeckeElement._raw({w: c * x for w, x in self.terms.items()},
                                 self.rank, self.mode)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        a, b = self._align(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.rank, self.mode, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        return f"HeckeElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda p: (p.length(), p.images)):
            c = self.terms[w]
            tw = "T[" + ",".join(map(str, w.images)) + "]"
            parts.append(tw if c == ONE else f"({c})*{tw}")
        return " + ".join(parts)


def basis_element(w: Permutation, mode: str = "quantum") -> HeckeElement:
    return HeckeElement._raw({w: ONE}, w.rank, _check_mode(mode))


def generator(i: int, rank: int, mode: str = "quantum") -> HeckeElement:
    return basis_element(Permutation.s(i, rank), mode)


def mul_basis_by_generator(w: Permutation, i: int, mode: str = "quantum") -> HeckeElement:
    """T_w * T_i."""
    if not 1 <= i < w.rank:
        raise ValueError(f"generator index {i} out of range for rank {w.rank}")
    return HeckeElement._raw(dict(_times_gen(w, i, mode)), w.rank, mode)


def _times_gen(w: Permutation, i: int, mode: str) -> list:
    imgs = w.images
    swapped = list(imgs)
    swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
    ws = _unsafe(tuple(swapped))
    if mode == "classical" or imgs[i - 1] < imgs[i]:
        return [(ws, ONE)]
    return [(ws, ONE), (w, Q_MINUS_QINV)]


@lru_cache(maxsize=None)
def _basis_product(w: Permutation, v: Permutation, mode: str) -> tuple:
    """T_w T_v as a tuple of (permutation, coefficient)."""
    cur = {w: ONE}
    for i in reduced_word(v):
        nxt = {}
        for x, c in cur.items():
            for y, e in _times_gen(x, i, mode):
                s = nxt[y] + c * e if y in nxt else c * e
                if s:
                    nxt[y] = s
                else:
                    del nxt[y]
        cur = nxt
    return tuple(cur.items())


def mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product in H_rank, reducing b term-by-term through reduced words."""
    if a.mode != b.mode:
        raise ValueError("mode mismatch")
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    out: dict = {}
    for v, cb in b.terms.items():
        for w, ca in a.terms.items():
            cab = ca * cb
            for x, e in _basis_product(w, v, a.mode):
                s = out[x] + cab * e if x in out else cab * e
                if s:
                    out[x] = s
                else:
                    del out[x]
    return HeckeElement._raw(out, a.rank, a.mode)


def generator_power(i: int, e: int, rank: int, mode: str = "quantum") -> HeckeElement:
    """T_i for e = +1, T_i^-1 = T_i + (q^-1 - q) for e = -1."""
    if not 1 <= i < rank:
        raise ValueError(f"generator index {i} out of range for rank {rank}")
    t = generator(i, rank, mode)
    if e == 1:
        return t
    if e != -1:
        raise ValueError("exponent must be +1 or -1")
    if mode == "classical":
        return t
    return t + HeckeElement.one(rank, mode).scale(-Q_MINUS_QINV)


def shift_up(a: HeckeElement, k: int, new_rank: int | None = None) -> HeckeElement:
    """Image of a under T_i -> T_{i+k}, inside H_new_rank."""
    if new_rank is None:
        new_rank = a.rank + k
    if new_rank < a.rank + k:
        raise ValueError(f"new rank {new_rank} too small for shift by {k} of rank {a.rank}")
    out = {_perm_shift(w, k).widen(new_rank): c for w, c in a.terms.items()}
    return HeckeElement._raw(out, new_rank, a.mode)


def product_of(factors: Iterable[HeckeElement], rank: int, mode: str = "quantum") -> HeckeElement:
    out = HeckeElement.one(rank, mode)
    for f in factors:
        out = mul(out, f.widen(rank))
    return out
