"""Induced modules V^{(x)d} (x)_{H_d} H_N and the super-extension product.

An ``ExtElement`` is stored in normal form: a map from pairs (I, w) to
coefficients, where I is a degree-d index and w is the shortest element of
its right coset S_d w inside S_N.  H_N is free over H_d on these w, so
e_I (x) T_sigma is rewritten as (e_I . T_u) (x) T_w with sigma = u w.

The classical mode uses the group algebra Q S_N and the signed permutation
action instead; everything else is shared.  Truncation rank N is explicit;
``widen`` moves an element to a larger rank, which never changes its normal
form because H_N sits inside H_{N+1} on the T_w basis.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .hecke import HeckeElement, _basis_product
from .permutations import (
    Permutation, _unsafe, coset_factorize, minimal_coset_reps, shift_up as _perm_shift,
)
from .qfield import ONE, RatFunc, as_ratfunc
from .superspace import SuperSig, SuperTensor, _accumulate, all_indices, tensor_basis_act

__all__ = [
    "ExtElement", "normal_form", "product", "right_act", "ext_basis", "coordinates",
]


class ExtElement:
    __slots__ = ("sig", "mode", "d", "N", "terms")

    def __init__(self, sig: SuperSig, mode: str, d: int, N: int,
                 terms: Mapping[tuple, object] = ()):
        if N < d:
            raise ValueError(f"rank {N} below tensor degree {d}")
        out: dict = {}
        for (I, sigma), c in dict(terms).items():
            if len(I) != d:
                raise ValueError(f"index {I} does not have degree {d}")
            h = HeckeElement({sigma.widen(N): as_ratfunc(c)}, N, mode)
            for key, x in normal_form(sig, tuple(I), h, mode).terms.items():
                _accumulate(out, [(key, x)])
        self.sig, self.mode, self.d, self.N, self.terms = sig, mode, d, N, out

    @classmethod
    def _raw(cls, sig, mode, d, N, terms) -> "ExtElement":
        obj = object.__new__(cls)
        obj.sig, obj.mode, obj.d, obj.N, obj.terms = sig, mode, d, N, terms
        return obj

    @classmethod
    def basis(cls, sig: SuperSig, I: Iterable[int], w: Permutation | None = None,
              mode: str = "quantum", N: int | None = None) -> "ExtElement":
        """e_I (x) T_w, normalized (w need not be a coset representative)."""
        I = tuple(I)
        rank = max(len(I), N or 0, w.rank if w is not None else 0)
        w = Permutation.identity(rank) if w is None else w.widen(rank)
        return normal_form(sig, I, HeckeElement._raw({w: ONE}, rank, mode), mode)

    @classmethod
    def unit(cls, sig: SuperSig, mode: str = "quantum", N: int = 0) -> "ExtElement":
        """1 (x) 1 in degree 0."""
        return cls._raw(sig, mode, 0, N, {((), Permutation.identity(N)): ONE})

    @classmethod
    def zero(cls, sig: SuperSig, mode: str, d: int, N: int) -> "ExtElement":
        return cls._raw(sig, mode, d, N, {})

    @classmethod
    def from_tensor(cls, t: SuperTensor, mode: str = "quantum", N: int | None = None) -> "ExtElement":
        N = t.degree if N is None else N
        w = Permutation.identity(N)
        return cls._raw(t.sig, mode, t.degree, N, {(I, w): c for I, c in t.terms.items()})

    def widen(self, N: int) -> "ExtElement":
        if N == self.N:
            return self
        if N < self.N:
            raise ValueError(f"cannot narrow rank {self.N} to {N}")
        return ExtElement._raw(self.sig, self.mode, self.d, N,
                               {(I, w.widen(N)): c for (I, w), c in self.terms.items()})

    def _align(self, other: "ExtElement"):
        if self.sig != other.sig or self.mode != other.mode:
            raise ValueError("incompatible extension elements")
        if self.d != other.d:
            if not self.terms or not other.terms:
                # zero elements carry no degree information worth keeping
                z, nz = (self, other) if not self.terms else (other, self)
                z = ExtElement.zero(nz.sig, nz.mode, nz.d, max(z.N, nz.N))
                return (z, nz.widen(z.N)) if z is self else (nz.widen(z.N), z)
            raise ValueError(f"degree mismatch: {self.d} vs {other.d}")
        N = max(self.N, other.N)
        return self.widen(N), other.widen(N)

    def __add__(self, other: "ExtElement") -> "ExtElement":
        a, b = self._align(other)
        out = dict(a.terms)
        _accumulate(out, b.terms.items())
        return ExtElement._raw(a.sig, a.mode, a.d, a.N, out)

    def __neg__(self):
        return ExtElement._raw(self.sig, self.mode, self.d, self.N,
                               {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ExtElement":
        c = as_ratfunc(c)
        if not c:
            return ExtElement.zero(self.sig, self.mode, self.d, self.N)
        if c == ONE:
            return self
        return ExtElement._raw(self.sig, self.mode, self.d, self.N,
                               {k: c * x for k, x in self.terms.items()})

    __rmul__ = scale

    def __mul__(self, other):
        if isinstance(other, ExtElement):
            return product(self, other)
        if isinstance(other, HeckeElement):
            return right_act(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, ExtElement):
            return NotImplemented
        a, b = self._align(other)
        return a.terms == b.terms

    def is_zero(self) -> bool:
        return not self.terms

    def tensor_part(self) -> SuperTensor:
        """The V^{(x)d} component along T_1 (only meaningful when N == d)."""
        out = {}
        for (I, w), c in self.terms.items():
            if not w.is_identity():
                raise ValueError("element has nontrivial Hecke tail")
            out[I] = c
        return SuperTensor._raw(self.sig, self.d, out)

    def __repr__(self):
        return f"ExtElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (I, w) in sorted(self.terms, key=lambda k: (k[1].length(), k[1].images, k[0])):
            c = self.terms[(I, w)]
            s = "e[" + ",".join(map(str, I)) + "] ⊗ T[" + ",".join(map(str, w.images)) + "]"
            parts.append(s if c == ONE else f"({c})*{s}")
        return " + ".join(parts)


@lru_cache(maxsize=None)
def _nf_basis(sig: SuperSig, I: tuple, sigma: Permutation, mode: str) -> tuple:
    """Normal form of e_I (x) T_sigma as ((I', w), coefficient) pairs."""
    d = len(I)
    u, w = coset_factorize(sigma, d)
    u_small = _unsafe(u.images[:d])
    return tuple(((J, w), c) for J, c in tensor_basis_act(sig, I, u_small, mode))


def normal_form(sig: SuperSig, I: Iterable[int], h: HeckeElement, mode: str | None = None) -> ExtElement:
    """Rewrite e_I (x) h over the basis of coset representatives."""
    I = tuple(I)
    mode = h.mode if mode is None else mode
    if h.mode != mode:
        raise ValueError("mode mismatch")
    d = len(I)
    if h.rank < d:
        h = h.widen(d)
    out: dict = {}
    for sigma, c in h.terms.items():
        _accumulate(out, [(k, c * x) for k, x in _nf_basis(sig, I, sigma, mode)])
    return ExtElement._raw(sig, mode, d, h.rank, out)


def _collect_hecke(out: dict, sig, mode, I: tuple, hterms, coeff) -> None:
    for x, e in hterms:
        ce = coeff * e
        _accumulate(out, [(k, ce * y) for k, y in _nf_basis(sig, I, x, mode)])


def product(a: ExtElement, b: ExtElement) -> ExtElement:
    """(e_J (x) T_tau)(e_I (x) T_sigma) = e_J e_I (x) T_tau^{up d_b} T_sigma."""
    if a.sig != b.sig or a.mode != b.mode:
        raise ValueError("mode or signature mismatch")
    db = b.d
    N = max(a.N + db, b.N)
    d = a.d + db
    out: dict = {}
    for (J, tau), ca in a.terms.items():
        tau_up = _perm_shift(tau, db).widen(N)
        for (I, sigma), cb in b.terms.items():
            _collect_hecke(out, a.sig, a.mode, J + I,
                           _basis_product(tau_up, sigma.widen(N), a.mode), ca * cb)
    return ExtElement._raw(a.sig, a.mode, d, N, out)


def right_act(phi: ExtElement, h: HeckeElement) -> ExtElement:
    """phi . h, widening whichever side has smaller rank."""
    if h.mode != phi.mode:
        raise ValueError("mode mismatch")
    N = max(phi.N, h.rank)
    phi, h = phi.widen(N), h.widen(N)
    out: dict = {}
    for (I, w), c in phi.terms.items():
        for v, cv in h.terms.items():
            _collect_hecke(out, phi.sig, phi.mode, I, _basis_product(w, v, phi.mode), c * cv)
    return ExtElement._raw(phi.sig, phi.mode, phi.d, N, out)


def ext_basis(sig: SuperSig, d: int, N: int) -> list[tuple]:
    """Normal-form basis keys (I, w) of V^{(x)d} (x)_{H_d} H_N, in a fixed order."""
    return [(I, w) for w in minimal_coset_reps(d, N) for I in all_indices(sig, d)]


def basis_elements(sig: SuperSig, d: int, N: int, mode: str = "quantum") -> list[ExtElement]:
    return [ExtElement._raw(sig, mode, d, N, {k: ONE}) for k in ext_basis(sig, d, N)]


def coordinates(phi: ExtElement, keys: list[tuple]) -> list[RatFunc]:
    from .qfield import ZERO
    pos = {k: i for i, k in enumerate(keys)}
    out = [ZERO] * len(keys)
    for k, c in phi.terms.items():
        if k not in pos:
            raise ValueError(f"term {k} outside the given basis")
        out[pos[k]] = c
    return out
