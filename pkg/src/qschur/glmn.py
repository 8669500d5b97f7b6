"""Actions of U(gl(m|n)) and U_q(gl(m|n)) on tensor superspaces.

Quantum generators act on V^{(x)d} through the iterated coproduct

    Delta(K_i) = K_i (x) K_i
    Delta(E_i) = 1 (x) E_i + E_i (x) K_i K_{i+1}^-1
    Delta(F_i) = F_i (x) 1 + K_{i+1} K_i^-1 (x) F_i

so E_i hits one slot and twists the slots to its right, F_i twists the slots
to its left.  An odd generator picks up (-1)^{parity of the slots it passes}.
Elements of U_q are kept as ``UqExpr``: linear combinations of generator
words, applied right to left.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .extension import ExtElement
from .qfield import ONE, Q, QINV, RatFunc, as_ratfunc
from .superspace import SuperSig, SuperTensor, _accumulate, all_indices, parity

__all__ = [
    "QGenerator", "K", "Kinv", "E", "F", "UqExpr", "composite", "act_on_v",
    "act_rho_d", "act_expr", "act_on_ext", "act_rho_d_classical",
    "relation_instances", "relation_families", "check_relation", "E_unit",
]

KINDS = ("K", "Kinv", "E", "F", "Eij")


@dataclass(frozen=True)
class QGenerator:
    """K_i, K_i^-1, E_i, F_i, or a composite root vector E_ij (i != j)."""

    kind: str
    i: int
    j: int | None = None
    k: int | None = None     # intermediate index used to expand a composite

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "Eij":
            if self.j is None or self.i == self.j:
                raise ValueError("composite E_ij needs two distinct indices")
        elif self.j is not None:
            raise ValueError(f"{self.kind} takes a single index")

    def validate(self, sig: SuperSig) -> None:
        top = sig.dim
        if self.kind in ("K", "Kinv"):
            ok = 1 <= self.i <= top
        elif self.kind in ("E", "F"):
            ok = 1 <= self.i < top
        else:
            ok = 1 <= self.i <= top and 1 <= self.j <= top
            if ok and self.k is not None:
                lo, hi = sorted((self.i, self.j))
                ok = lo < self.k < hi
        if not ok:
            raise ValueError(f"{self} out of range for gl({sig.m}|{sig.n})")

    def parity(self, sig: SuperSig) -> int:
        if self.kind in ("K", "Kinv"):
            return 0
        if self.kind in ("E", "F"):
            return 1 if self.i == sig.m else 0
        return (parity(sig, self.i) + parity(sig, self.j)) % 2

    def __str__(self):
        if self.kind == "Eij":
            return f"E{self.i},{self.j}"
        if self.kind == "Kinv":
            return f"K{self.i}^-1"
        return f"{self.kind}{self.i}"


def K(i: int) -> QGenerator:
    return QGenerator("K", i)


def Kinv(i: int) -> QGenerator:
    return QGenerator("Kinv", i)


def E(i: int) -> QGenerator:
    return QGenerator("E", i)


def F(i: int) -> QGenerator:
    return QGenerator("F", i)


def E_unit(i: int, j: int, k: int | None = None) -> QGenerator:
    """E_ij with the conventions E_{i,i+1} = E_i and E_{i+1,i} = F_i."""
    if j == i + 1:
        return E(i)
    if i == j + 1:
        return F(j)
    return QGenerator("Eij", i, j, k)


class UqExpr:
    """Linear combination of generator words; a word acts right to left."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, object] = ()):
        out: dict = {}
        _accumulate(out, [(tuple(w), as_ratfunc(c)) for w, c in dict(terms).items()])
        self.terms = out

    @classmethod
    def gen(cls, *gens: QGenerator) -> "UqExpr":
        return cls({tuple(gens): ONE})

    @classmethod
    def scalar(cls, c) -> "UqExpr":
        return cls({(): c})

    def __add__(self, other: "UqExpr") -> "UqExpr":
        out = dict(self.terms)
        _accumulate(out, other.terms.items())
        e = UqExpr()
        e.terms = out
        return e

    def __neg__(self):
        return self.scale(-ONE)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "UqExpr":
        c = as_ratfunc(c)
        return UqExpr({w: c * x for w, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, UqExpr):
            return self.scale(other)
        out: dict = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                _accumulate(out, [(a + b, x * y)])
        e = UqExpr()
        e.terms = out
        return e

    def __rmul__(self, c):
        return self.scale(c)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*" + ("·".join(map(str, w)) or "1")
                          for w, c in self.terms.items())


def composite(sig: SuperSig, i: int, j: int, k: int | None = None) -> UqExpr:
    """E_ij as a word expression.

    For i < j: E_ij = E_ik E_kj - q_k E_kj E_ik; for i > j:
    E_ij = E_ik E_kj - q_k^-1 E_kj E_ik, with k = max(i, j) - 1 by default.
    """
    if i == j:
        raise ValueError("composite needs distinct indices")
    if abs(i - j) == 1:
        return UqExpr.gen(E_unit(i, j))
    lo, hi = sorted((i, j))
    k = hi - 1 if k is None else k
    if not lo < k < hi:
        raise ValueError(f"intermediate index {k} not strictly between {i} and {j}")
    qk = sig.q_i(k)
    c = qk if i < j else qk ** -1
    a, b = composite(sig, i, k), composite(sig, k, j)
    return a * b - (b * a).scale(c)


# ------------------------------------------------------------------ actions

def _check_index(sig: SuperSig, j: int) -> None:
    parity(sig, j)


def act_on_v(sig: SuperSig, g: QGenerator, j: int) -> SuperTensor:
    """Natural representation on V."""
    g.validate(sig)
    _check_index(sig, j)
    return SuperTensor._raw(sig, 1, dict(_on_basis_vector(sig, g, j)))


def _on_basis_vector(sig: SuperSig, g: QGenerator, j: int) -> list:
    """g . e_j as [(index tuple, coefficient)] for K/E/F generators."""
    if g.kind == "K":
        return [((j,), sig.q_i(j))] if j == g.i else [((j,), ONE)]
    if g.kind == "Kinv":
        return [((j,), sig.q_i(j) ** -1)] if j == g.i else [((j,), ONE)]
    if g.kind == "E":
        return [((g.i,), ONE)] if j == g.i + 1 else []
    if g.kind == "F":
        return [((g.i + 1,), ONE)] if j == g.i else []
    raise ValueError("composite generators act through their expansion")


def _k_weight(sig: SuperSig, i: int, e: int, entries: Iterable[int]) -> RatFunc:
    cnt = sum(1 for x in entries if x == i)
    return sig.q_i(i) ** (e * cnt) if cnt else ONE


@lru_cache(maxsize=None)
def _gen_on_index(sig: SuperSig, g: QGenerator, I: tuple) -> tuple:
    """Delta^(d-1)(g) applied to e_I, I = (i_d, ..., i_1)."""
    d = len(I)
    if g.kind in ("K", "Kinv"):
        e = 1 if g.kind == "K" else -1
        return ((I, _k_weight(sig, g.i, e, I)),)
    if g.kind == "Eij":
        out: dict = {}
        for w, c in composite(sig, g.i, g.j, g.k).terms.items():
            _accumulate(out, [(J, c * x) for J, x in _word_on_index(sig, w, I)])
        return tuple(out.items())
    odd = g.parity(sig)
    i = g.i
    out = {}
    for slot in range(d):                       # slot t holds position d - t
        images = _on_basis_vector(sig, g, I[slot])
        if not images:
            continue
        coeff = ONE
        if odd and sum(parity(sig, x) for x in I[:slot]) % 2:
            coeff = -ONE
        if g.kind == "E":
            rest = I[slot + 1:]                  # twisted by K_i K_{i+1}^-1
            coeff = coeff * _k_weight(sig, i, 1, rest) * _k_weight(sig, i + 1, -1, rest)
        else:
            rest = I[:slot]                      # twisted by K_{i+1} K_i^-1
            coeff = coeff * _k_weight(sig, i + 1, 1, rest) * _k_weight(sig, i, -1, rest)
        for (x,), c in images:
            J = I[:slot] + (x,) + I[slot + 1:]
            _accumulate(out, [(J, coeff * c)])
    return tuple(out.items())


def _word_on_index(sig: SuperSig, word: tuple, I: tuple) -> list:
    cur = {I: ONE}
    for g in reversed(word):
        nxt: dict = {}
        for J, c in cur.items():
            _accumulate(nxt, [(L, c * x) for L, x in _gen_on_index(sig, g, J)])
        cur = nxt
    return list(cur.items())


def act_rho_d(g: QGenerator, t: SuperTensor) -> SuperTensor:
    """rho_d(g) on a degree-d tensor."""
    g.validate(t.sig)
    out: dict = {}
    for I, c in t.terms.items():
        _accumulate(out, [(J, c * x) for J, x in _gen_on_index(t.sig, g, I)])
    return SuperTensor._raw(t.sig, t.degree, out)


def act_expr(x: UqExpr, t: SuperTensor) -> SuperTensor:
    for w in x.terms:
        for g in w:
            g.validate(t.sig)
    out: dict = {}
    for w, cw in x.terms.items():
        for I, c in t.terms.items():
            cc = c * cw
            _accumulate(out, [(J, cc * y) for J, y in _word_on_index(t.sig, w, I)])
    return SuperTensor._raw(t.sig, t.degree, out)


def act_on_ext(x: QGenerator | UqExpr, phi: ExtElement) -> ExtElement:
    """x . (e_I (x) T_w) = (x . e_I) (x) T_w."""
    if isinstance(x, QGenerator):
        x.validate(phi.sig)
        x = UqExpr.gen(x)
    out: dict = {}
    for (I, w), c in phi.terms.items():
        for word, cw in x.terms.items():
            cc = c * cw
            _accumulate(out, [((J, w), cc * y) for J, y in _word_on_index(phi.sig, word, I)])
    return ExtElement._raw(phi.sig, phi.mode, phi.d, phi.N, out)


def act_rho_d_classical(i: int, j: int, t: SuperTensor) -> SuperTensor:
    """Matrix unit E_ij on V^{(x)d}: sum over slots with the Koszul sign."""
    sig = t.sig
    odd = (parity(sig, i) + parity(sig, j)) % 2
    out: dict = {}
    for I, c in t.terms.items():
        for slot, x in enumerate(I):
            if x != j:
                continue
            s = c
            if odd and sum(parity(sig, y) for y in I[:slot]) % 2:
                s = -s
            _accumulate(out, [(I[:slot] + (i,) + I[slot + 1:], s)])
    return SuperTensor._raw(sig, t.degree, out)


def act_classical_on_ext(i: int, j: int, phi: ExtElement) -> ExtElement:
    out: dict = {}
    for (I, w), c in phi.terms.items():
        t = act_rho_d_classical(i, j, SuperTensor._raw(phi.sig, phi.d, {I: c}))
        _accumulate(out, [((J, w), y) for J, y in t.terms.items()])
    return ExtElement._raw(phi.sig, phi.mode, phi.d, phi.N, out)


# ------------------------------------------------------------------ relations

def _g(*gens) -> UqExpr:
    return UqExpr.gen(*gens)


def _quartic(sig: SuperSig, X) -> UqExpr:
    m = sig.m
    a, b, c = X(m - 1), X(m), X(m + 1)
    return (_g(a, b, c) - _g(a, c, b).scale(QINV) - _g(b, c, a).scale(Q) + _g(c, b, a))


def relation_instances(sig: SuperSig) -> list[tuple[str, UqExpr, UqExpr]]:
    """Every defining relation of U_q(gl(m|n)) as (id, lhs, rhs)."""
    m, top = sig.m, sig.dim
    idx = list(range(1, top + 1))
    simple = list(range(1, top))
    one = UqExpr.scalar(1)
    zero = UqExpr()
    rels = []
    for i in idx:
        for j in idx:
            rels.append((f"K-commute-{i}-{j}", _g(K(i), K(j)), _g(K(j), K(i))))
        rels.append((f"K-inverse-{i}", _g(K(i), Kinv(i)), one))
        rels.append((f"K-inverse-left-{i}", _g(Kinv(i), K(i)), one))
        for j in simple:
            qi = sig.q_i(i)
            ee = (1 if i == j else 0) - (1 if i == j + 1 else 0)
            rels.append((f"KE-{i}-{j}", _g(K(i), E(j)), _g(E(j), K(i)).scale(qi ** ee)))
            rels.append((f"KF-{i}-{j}", _g(K(i), F(j)), _g(F(j), K(i)).scale(qi ** -ee)))
    for i in simple:
        for j in simple:
            sgn = -1 if (i == m and j == m) else 1
            lhs = _g(E(i), F(j)) - _g(F(j), E(i)).scale(sgn)
            rhs = zero
            if i == j:
                qi = sig.q_i(i)
                rhs = (_g(K(i), Kinv(i + 1)) - _g(Kinv(i), K(i + 1))).scale((qi - qi ** -1).inverse())
            rels.append((f"EF-{i}-{j}", lhs, rhs))
            if abs(i - j) > 1:
                rels.append((f"E-distant-{i}-{j}", _g(E(i), E(j)), _g(E(j), E(i))))
                rels.append((f"F-distant-{i}-{j}", _g(F(i), F(j)), _g(F(j), F(i))))
            if i != m and abs(i - j) == 1:
                qi = sig.q_i(i)
                c = qi + qi ** -1
                for name, X in (("E", E), ("F", F)):
                    lhs = _g(X(i), X(i), X(j)) - _g(X(i), X(j), X(i)).scale(c) + _g(X(j), X(i), X(i))
                    rels.append((f"serre-{name}-{i}-{j}", lhs, zero))
    if 1 <= m < top:
        rels.append(("odd-square-E", _g(E(m), E(m)), zero))
        rels.append(("odd-square-F", _g(F(m), F(m)), zero))
    if m >= 2 and top - m >= 2:
        for name, X in (("E", E), ("F", F)):
            w = _quartic(sig, X)
            x = _g(X(m))
            rels.append((f"quartic-{name}", x * w + w * x, zero))
    return rels


def relation_families(sig: SuperSig) -> list[str]:
    seen = []
    for rid, _, _ in relation_instances(sig):
        fam = _family(rid)
        if fam not in seen:
            seen.append(fam)
    return seen


def _family(rid: str) -> str:
    parts = rid.split("-")
    while parts and parts[-1].isdigit():
        parts.pop()
    return "-".join(parts)


def check_relation(sig: SuperSig, rel: str, d: int) -> bool:
    """True iff the relation (an instance id or a whole family) holds on V^{(x)d}."""
    rels = relation_instances(sig)
    chosen = [r for r in rels if r[0] == rel] or [r for r in rels if _family(r[0]) == rel]
    if not chosen:
        raise ValueError(f"unknown relation {rel!r} for gl({sig.m}|{sig.n})")
    for I in all_indices(sig, d):
        t = SuperTensor._raw(sig, d, {I: ONE})
        for _, lhs, rhs in chosen:
            if act_expr(lhs, t) != act_expr(rhs, t):
                return False
    return True
