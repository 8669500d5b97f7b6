"""Creation and annihilation operators on the super-extension algebra.

L(e_j) multiplies on the left by e_j (x) 1.  L(e_j^*) removes one factor e_j
and records the move in the Hecke tail:

* classical: the k-th term carries the sign of moving e_j past i_d..i_{k+1}
  and the cycle (d d-1 ... k) = s_{d-1} ... s_k on the group side;
* quantum: the same sign, a factor q_j^{-1} for every e_j below position k
  (the f_j maps), and T_{d-1}^{x_d} ... T_k^{x_{k+1}} with
  x_p = -gamma(j, i_p) (the g_j maps, each shifted past the factors to its
  right by the extension product).

Operators are closures wrapped in ``ExtOperator`` so they compose with ``@``
and add with ``+``; matrices are only built in ``centralizer``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Sequence

from .extension import ExtElement, _accumulate, _nf_basis, product
from .hecke import HeckeElement, generator_power, mul
from .permutations import Permutation
from .qfield import ONE, RatFunc, as_ratfunc, q_factorial
from .superspace import SuperSig, SuperTensor, gamma, multiplicities, parity

__all__ = [
    "ExtOperator", "creation", "annihilation", "annihilation_classical",
    "annihilation_quantum", "h_map", "L", "Lstar", "LT", "K_op", "identity_op",
    "euler_classical", "euler_quantum", "k_bracket", "k_factorial",
    "k_bracket_op", "k_factorial_op", "increasing_indices", "chain",
    "K_apply", "hecke_left", "left_mult", "LX", "pi_op", "apply_descending",
    "descending_product", "q_multiplicity_factorial",
]


@dataclass(frozen=True)
class ExtOperator:
    """Linear endomorphism of the extension algebra given by a closure.

    ``shift`` is the change in tensor degree; ``tag`` is a readable chain.
    """

    fn: Callable[[ExtElement], ExtElement]
    tag: tuple
    shift: int = 0

    def __call__(self, phi: ExtElement) -> ExtElement:
        return self.fn(phi)

    def __matmul__(self, other: "ExtOperator") -> "ExtOperator":
        f, g = self.fn, other.fn
        return ExtOperator(lambda phi: f(g(phi)), self.tag + other.tag,
                           self.shift + other.shift)

    def __add__(self, other: "ExtOperator") -> "ExtOperator":
        if self.shift != other.shift:
            raise ValueError("cannot add operators of different degree shifts")
        f, g = self.fn, other.fn
        return ExtOperator(lambda phi: f(phi) + g(phi),
                           (("sum", self.tag, other.tag),), self.shift)

    def __neg__(self):
        return self.scaled(-ONE)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c) -> "ExtOperator":
        c = as_ratfunc(c)
        f = self.fn
        return ExtOperator(lambda phi: f(phi).scale(c), (("scale", str(c)),) + self.tag,
                           self.shift)

    def __rmul__(self, c):
        return self.scaled(c)

    def __repr__(self):
        return "ExtOperator(" + " ".join(map(str, self.tag)) + ")"


def identity_op() -> ExtOperator:
    return ExtOperator(lambda phi: phi, ("id",), 0)


def _termwise(phi: ExtElement, d_out: int, N_out: int, basis_fn) -> ExtElement:
    out: dict = {}
    for key, c in phi.terms.items():
        _accumulate(out, [(k, c * x) for k, x in basis_fn(key)])
    return ExtElement._raw(phi.sig, phi.mode, d_out, N_out, out)


# ---------------------------------------------------------------- creation

def creation(j: int, phi: ExtElement) -> ExtElement:
    """L(e_j)(phi) = (e_j (x) 1) . phi."""
    parity(phi.sig, j)
    return product(ExtElement.basis(phi.sig, (j,), mode=phi.mode), phi)


def left_mult(x: ExtElement, phi: ExtElement) -> ExtElement:
    return product(x, phi)


def hecke_left(h: HeckeElement, phi: ExtElement) -> ExtElement:
    """L(T)(phi) = (1 (x) T) . phi."""
    unit = ExtElement._raw(phi.sig, phi.mode, 0, h.rank, dict(
        (((), w), c) for w, c in h.terms.items()))
    return product(unit, phi)


# ------------------------------------------------------------ annihilation

@lru_cache(maxsize=None)
def _ann_summand(sig: SuperSig, mode: str, j: int, I: tuple, w: Permutation, k: int) -> tuple:
    """k-th term of L(e_j^*)(e_I (x) T_w), as normal-form pairs."""
    d = len(I)
    slot = d - k
    if I[slot] != j:
        return ()
    N = w.rank
    pj = parity(sig, j)
    coeff = ONE
    if pj and sum(parity(sig, i) for i in I[:slot]) % 2:
        coeff = -ONE
    if mode == "quantum":
        below = sum(1 for i in I[slot + 1:] if i == j)
        if below:
            coeff = coeff * sig.q_i(j) ** (-below)
    h = HeckeElement.one(N, mode)
    # positions p = d, ..., k+1 contribute T_{p-1}^{x_p}, leftmost first
    for p in range(d, k, -1):
        x = -gamma(j, I[d - p])
        h = mul(h, generator_power(p - 1, x, N, mode))
    h = mul(h, HeckeElement._raw({w: ONE}, N, mode))
    J = I[:slot] + I[slot + 1:]
    out: dict = {}
    for sigma, c in h.terms.items():
        cc = coeff * c
        _accumulate(out, [(key, cc * x) for key, x in _nf_basis(sig, J, sigma, mode)])
    return tuple(out.items())


@lru_cache(maxsize=None)
def _ann_basis(sig: SuperSig, mode: str, j: int, I: tuple, w: Permutation) -> tuple:
    out: dict = {}
    for k in range(1, len(I) + 1):
        _accumulate(out, _ann_summand(sig, mode, j, I, w, k))
    return tuple(out.items())


def annihilation(j: int, phi: ExtElement) -> ExtElement:
    """L(e_j^*)(phi) in the mode of phi; zero on degree 0."""
    parity(phi.sig, j)
    if phi.d == 0:
        return ExtElement.zero(phi.sig, phi.mode, 0, phi.N)
    return _termwise(phi, phi.d - 1, phi.N,
                     lambda key: _ann_basis(phi.sig, phi.mode, j, key[0], key[1]))


def annihilation_classical(j: int, phi: ExtElement) -> ExtElement:
    if phi.mode != "classical":
        raise ValueError("classical annihilation needs a classical element")
    return annihilation(j, phi)


def annihilation_quantum(j: int, phi: ExtElement) -> ExtElement:
    if phi.mode != "quantum":
        raise ValueError("quantum annihilation needs a quantum element")
    return annihilation(j, phi)


def h_map(j: int, k: int, t: SuperTensor | ExtElement, mode: str = "quantum") -> ExtElement:
    """The k-th summand of L(e_j^*), applied to t (x) 1 (or to an ExtElement)."""
    phi = t if isinstance(t, ExtElement) else ExtElement.from_tensor(t, mode)
    if not 1 <= k <= phi.d:
        raise ValueError(f"position {k} out of range for degree {phi.d}")
    return _termwise(phi, phi.d - 1, phi.N,
                     lambda key: _ann_summand(phi.sig, phi.mode, j, key[0], key[1], k))


# ------------------------------------------------------------ K operators

def K_apply(i: int, e: int, phi: ExtElement) -> ExtElement:
    """K_i^e acting on the tensor factor: q_i^{e * m_i(I)} on e_I (x) T_w."""
    qi = phi.sig.q_i(i)
    out = {}
    for (I, w), c in phi.terms.items():
        cnt = sum(1 for x in I if x == i)
        out[(I, w)] = c * qi ** (e * cnt) if cnt else c
    return ExtElement._raw(phi.sig, phi.mode, phi.d, phi.N, out)


def _diagonal(phi: ExtElement, value: Callable[[tuple], RatFunc]) -> ExtElement:
    out: dict = {}
    for (I, w), c in phi.terms.items():
        _accumulate(out, [((I, w), c * value(I))])
    return ExtElement._raw(phi.sig, phi.mode, phi.d, phi.N, out)


def _bracket_value(sig: SuperSig, i: int, a: int, I: Sequence[int]) -> RatFunc:
    qi = sig.q_i(i)
    c = sum(1 for x in I if x == i)
    return (qi ** (a + c) - qi ** (-a - c)) / (qi - qi ** -1)


def _factorial_value(sig: SuperSig, i: int, h: int, I: Sequence[int]) -> RatFunc:
    out = ONE
    for a in range(0, -h, -1):
        out = out * _bracket_value(sig, i, a, I)
        if not out:
            break
    return out


def k_bracket(i: int, a: int, t: SuperTensor) -> SuperTensor:
    """[K_i : a] = (q_i^a K_i - q_i^-a K_i^-1) / (q_i - q_i^-1) on a tensor."""
    parity(t.sig, i)
    return SuperTensor(t.sig, t.degree,
                       {I: c * _bracket_value(t.sig, i, a, I) for I, c in t.terms.items()})


def k_factorial(i: int, h: int, t: SuperTensor) -> SuperTensor:
    """[K_i]^h_! = [K_i:0][K_i:-1] ... [K_i:1-h]; the identity for h = 0."""
    parity(t.sig, i)
    return SuperTensor(t.sig, t.degree,
                       {I: c * _factorial_value(t.sig, i, h, I) for I, c in t.terms.items()})


# ------------------------------------------------------------ operator factories

def L(j: int) -> ExtOperator:
    return ExtOperator(lambda phi: creation(j, phi), (f"L(e{j})",), 1)


def Lstar(j: int) -> ExtOperator:
    return ExtOperator(lambda phi: annihilation(j, phi), (f"L(e{j}*)",), -1)


def LT(h: HeckeElement) -> ExtOperator:
    return ExtOperator(lambda phi: hecke_left(h, phi), (f"L({h})",), 0)


def LX(x: ExtElement) -> ExtOperator:
    return ExtOperator(lambda phi: product(x, phi), (f"L({x})",), x.d)


def K_op(i: int, e: int = 1) -> ExtOperator:
    return ExtOperator(lambda phi: K_apply(i, e, phi), (f"K{i}^{e}",), 0)


def pi_op(h: HeckeElement) -> ExtOperator:
    """pi(h): right multiplication."""
    from .extension import right_act
    return ExtOperator(lambda phi: right_act(phi, h), (f"pi({h})",), 0)


def k_bracket_op(i: int, a: int) -> ExtOperator:
    return ExtOperator(lambda phi: _diagonal(phi, lambda I: _bracket_value(phi.sig, i, a, I)),
                       (f"[K{i}:{a}]",), 0)


def k_factorial_op(i: int, h: int) -> ExtOperator:
    return ExtOperator(lambda phi: _diagonal(phi, lambda I: _factorial_value(phi.sig, i, h, I)),
                       (f"[K{i}]^{h}!",), 0)


def chain(creations: Sequence[int], annihilations: Sequence[int]) -> ExtOperator:
    """L(e_{c_1}) ... L(e_{c_r}) L(e_{a_1}^*) ... L(e_{a_s}^*), read left to right."""
    op = identity_op()
    for j in creations:
        op = op @ L(j)
    for j in annihilations:
        op = op @ Lstar(j)
    return op


def descending_product(I: Sequence[int]) -> ExtOperator:
    """L(e_{i_d}) ... L(e_{i_1}) L(e_{i_1}^*) ... L(e_{i_d}^*) for I = (i_d, ..., i_1)."""
    I = tuple(I)
    return chain(I, I[::-1])


def apply_descending(I: Sequence[int], phi: ExtElement) -> ExtElement:
    I = tuple(I)
    for j in I:                # L(e_{i_d}^*) acts first
        phi = annihilation(j, phi)
    for j in reversed(I):      # then L(e_{i_1}), ..., L(e_{i_d})
        phi = creation(j, phi)
    return phi


# ------------------------------------------------------------ Euler operators

def increasing_indices(sig: SuperSig, d: int) -> list[tuple]:
    """Indices (i_d, ..., i_1) with i_d <= i_{d-1} <= ... <= i_1."""
    return [tuple(c) for c in combinations_with_replacement(sig.indices(), d)]


def euler_classical(d: int, phi: ExtElement) -> ExtElement:
    """(1/d!) sum over all I of the descending product."""
    from itertools import product as iproduct
    from math import factorial
    if phi.mode != "classical":
        raise ValueError("classical Euler operator needs a classical element")
    acc = ExtElement.zero(phi.sig, phi.mode, phi.d, phi.N)
    for I in iproduct(phi.sig.indices(), repeat=d):
        acc = acc + apply_descending(I, phi)
    return acc.scale(as_ratfunc(1) / factorial(d))


def q_multiplicity_factorial(sig: SuperSig, I: Sequence[int]) -> RatFunc:
    out = ONE
    for c in multiplicities(sig, I):
        out = out * q_factorial(c)
    return out


def euler_quantum(d: int, phi: ExtElement) -> ExtElement:
    """Sum over weakly increasing I of [m(I)]!^-1 times the descending product."""
    if phi.mode != "quantum":
        raise ValueError("quantum Euler operator needs a quantum element")
    acc = ExtElement.zero(phi.sig, phi.mode, phi.d, phi.N)
    for I in increasing_indices(phi.sig, d):
        acc = acc + apply_descending(I, phi).scale(q_multiplicity_factorial(phi.sig, I).inverse())
    return acc
