"""The superspace V = Q(q)^{m|n} and its tensor powers.

Tensor indices are plain tuples written the way the formulas read them,
I = (i_d, ..., i_1): ``I[0]`` is the leftmost factor i_d and position p
(1-based, counted from the right) is ``I[d - p]``.  The right action of S_d
on indices is (I . sigma) at position p = i_{sigma(p)}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as _iproduct
from math import factorial
from typing import Iterable, Mapping, Sequence

from .hecke import HeckeElement, Q_MINUS_QINV
from .permutations import Permutation, reduced_word
from .qfield import ONE, Q, QINV, RatFunc, as_ratfunc

__all__ = [
    "SuperSig", "SuperTensor", "parity", "gamma", "sign_eps", "act_sym",
    "act_hecke_gen", "act_hecke", "index_act", "multiplicities",
    "multiplicity_factorial", "all_indices", "entry",
]


@dataclass(frozen=True)
class SuperSig:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            raise ValueError(f"need m, n >= 0 and m + n >= 1, got ({self.m}|{self.n})")

    @property
    def dim(self) -> int:
        return self.m + self.n

    def parity(self, i: int) -> int:
        return parity(self, i)

    def q_i(self, i: int) -> RatFunc:
        """q for even indices, q^-1 for odd ones."""
        return QINV if parity(self, i) else Q

    def indices(self) -> range:
        return range(1, self.m + self.n + 1)


def parity(sig: SuperSig, i: int) -> int:
    if not 1 <= i <= sig.m + sig.n:
        raise ValueError(f"index {i} out of range for gl({sig.m}|{sig.n})")
    return 0 if i <= sig.m else 1


def gamma(i: int, j: int) -> int:
    return 1 if i > j else -1


def entry(I: Sequence[int], p: int) -> int:
    """i_p of I = (i_d, ..., i_1)."""
    return I[len(I) - p]


def index_act(I: tuple, sigma: Permutation) -> tuple:
    d = len(I)
    if sigma.rank != d:
        raise ValueError(f"rank {sigma.rank} does not match degree {d}")
    img = sigma.images
    return tuple(I[d - img[d - 1 - t]] for t in range(d))


def multiplicities(sig: SuperSig, I: Iterable[int]) -> tuple:
    counts = [0] * sig.dim
    for i in I:
        counts[i - 1] += 1
    return tuple(counts)


def multiplicity_factorial(sig: SuperSig, I: Iterable[int]) -> int:
    out = 1
    for c in multiplicities(sig, I):
        out *= factorial(c)
    return out


def all_indices(sig: SuperSig, d: int) -> list[tuple]:
    return list(_iproduct(sig.indices(), repeat=d))


class SuperTensor:
    """Element of V^{(x)d}: a map from index tuples to coefficients."""

    __slots__ = ("sig", "degree", "terms")

    def __init__(self, sig: SuperSig, degree: int, terms: Mapping[tuple, object] = ()):
        out = {}
        for I, c in dict(terms).items():
            I = tuple(I)
            if len(I) != degree:
                raise ValueError(f"index {I} does not have degree {degree}")
            for i in I:
                parity(sig, i)
            c = as_ratfunc(c)
            if c:
                s = out[I] + c if I in out else c
                if s:
                    out[I] = s
                else:
                    del out[I]
        self.sig = sig
        self.degree = degree
        self.terms = out

    @classmethod
    def _raw(cls, sig, degree, terms):
        obj = object.__new__(cls)
        obj.sig, obj.degree, obj.terms = sig, degree, terms
        return obj

    @classmethod
    def basis(cls, sig: SuperSig, I: Sequence[int]) -> "SuperTensor":
        return cls(sig, len(I), {tuple(I): ONE})

    def _check(self, other: "SuperTensor"):
        if self.sig != other.sig or self.degree != other.degree:
            raise ValueError("incompatible tensors")

    def __add__(self, other: "SuperTensor") -> "SuperTensor":
        self._check(other)
        out = dict(self.terms)
        _accumulate(out, other.terms.items())
        return SuperTensor._raw(self.sig, self.degree, out)

    def __neg__(self):
        return SuperTensor._raw(self.sig, self.degree, {I: -c for I, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SuperTensor":
        c = as_ratfunc(c)
        if not c:
            return SuperTensor._raw(self.sig, self.degree, {})
        return SuperTensor._raw(self.sig, self.degree, {I: c * x for I, x in self.terms.items()})

    __rmul__ = scale

    def __mul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, SuperTensor):
            return NotImplemented
        return (self.sig, self.degree, self.terms) == (other.sig, other.degree, other.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        return f"SuperTensor({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for I in sorted(self.terms):
            c = self.terms[I]
            e = "e[" + ",".join(map(str, I)) + "]"
            parts.append(e if c == ONE else f"({c})*{e}")
        return " + ".join(parts)


def _accumulate(out: dict, items) -> None:
    for k, c in items:
        if k in out:
            s = out[k] + c
            if s:
                out[k] = s
            else:
                del out[k]
        elif c:
            out[k] = c


def sign_eps(parities: Sequence[int], sigma: Permutation) -> int:
    """Koszul sign of (v_d ... v_1) . sigma, parities given as (|v_d|, ..., |v_1|)."""
    d = len(parities)
    if sigma.rank != d:
        raise ValueError(f"rank {sigma.rank} does not match {d} parities")
    par = list(parities)
    sign = 1
    for k in reduced_word(sigma):
        a, b = d - k, d - k - 1   # list slots of positions k and k+1
        if par[a] and par[b]:
            sign = -sign
        par[a], par[b] = par[b], par[a]
    return sign


def act_sym(t: SuperTensor, sigma: Permutation) -> SuperTensor:
    """Signed right action of S_d on V^{(x)d}."""
    if sigma.rank != t.degree:
        raise ValueError(f"rank {sigma.rank} does not match degree {t.degree}")
    out: dict = {}
    for I, c in t.terms.items():
        for J, e in _basis_act(t.sig, I, sigma, "classical"):
            _accumulate(out, [(J, c * e)])
    return SuperTensor._raw(t.sig, t.degree, out)


def _gen_on_index(sig: SuperSig, I: tuple, k: int, mode: str) -> list:
    """e_I . T_k (or . s_k in classical mode) as [(J, coefficient)]."""
    d = len(I)
    a, b = d - k, d - k - 1          # slots of i_k and i_{k+1}
    ik, ik1 = I[a], I[b]
    pk, pk1 = parity(sig, ik), parity(sig, ik1)
    sw = list(I)
    sw[a], sw[b] = ik1, ik
    sw = tuple(sw)
    sign = -ONE if (pk and pk1) else ONE
    if mode == "classical":
        return [(sw, sign)]
    if ik > ik1:
        return [(sw, sign)]
    if ik == ik1:
        return [(I, -QINV if pk else Q)]
    return [(sw, sign), (I, Q_MINUS_QINV)]


def act_hecke_gen(t: SuperTensor, k: int, e: int = 1) -> SuperTensor:
    """t . T_k for e = +1, t . T_k^-1 for e = -1."""
    if not 1 <= k < t.degree:
        raise ValueError(f"position {k} out of range for degree {t.degree}")
    out: dict = {}
    for I, c in t.terms.items():
        _accumulate(out, [(J, c * x) for J, x in _gen_on_index(t.sig, I, k, "quantum")])
        if e == -1:
            _accumulate(out, [(I, -c * Q_MINUS_QINV)])
        elif e != 1:
            raise ValueError("exponent must be +1 or -1")
    return SuperTensor._raw(t.sig, t.degree, out)


@lru_cache(maxsize=None)
def _basis_act(sig: SuperSig, I: tuple, w: Permutation, mode: str) -> tuple:
    """e_I . T_w (quantum) or e_I . w (classical)."""
    cur = {I: ONE}
    for k in reduced_word(w):
        nxt: dict = {}
        for J, c in cur.items():
            _accumulate(nxt, [(K, c * x) for K, x in _gen_on_index(sig, J, k, mode)])
        cur = nxt
    return tuple(cur.items())


def act_hecke(t: SuperTensor, h: HeckeElement) -> SuperTensor:
    """Right action of H_d (or Q S_d for a classical element) on V^{(x)d}."""
    if h.rank > max(t.degree, 1):
        raise ValueError(f"Hecke rank {h.rank} exceeds degree {t.degree}")
    h = h.widen(t.degree) if t.degree else h
    out: dict = {}
    for w, cw in h.terms.items():
        for I, c in t.terms.items():
            cc = c * cw
            _accumulate(out, [(J, cc * x) for J, x in _basis_act(t.sig, I, w, h.mode)])
    return SuperTensor._raw(t.sig, t.degree, out)


def tensor_basis_act(sig: SuperSig, I: tuple, w: Permutation, mode: str) -> tuple:
    return _basis_act(sig, I, w, mode)
