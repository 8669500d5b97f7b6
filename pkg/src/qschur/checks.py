"""Named identity checks shared by the command line and the acceptance tests.

Each check takes a ``Params`` record and returns ``(ok, detail)``; ``ok`` is
None when the check does not apply (wrong mode, parameters out of range).
Operators are compared on every basis element of the relevant modules up to
the requested degree, so a pass is an exact statement at that size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as _itperms
from itertools import product as iproduct
from typing import Callable, Iterable

from .centralizer import (
    Echelon, ResourceCapError, verify_duality, DEFAULT_DIM_CAP,
)
from .extension import ExtElement, basis_elements, right_act
from .glmn import (
    E, F, K, Kinv, UqExpr, act_classical_on_ext, act_expr, act_on_ext,
    composite, relation_families, check_relation,
)
from .hecke import HeckeElement, basis_element, generator, generator_power, mul
from .operators import (
    K_apply, L, LT, Lstar, annihilation, apply_descending, creation, euler_classical,
    euler_quantum, h_map, increasing_indices, k_factorial_op,
    q_multiplicity_factorial,
)
from .permutations import (
    Permutation, all_permutations, coset_factorize, is_minimal_coset_rep, shift_up,
    staircase_decompose,
)
from .qfield import ONE, Q, QINV, as_ratfunc
from .superspace import (
    SuperSig, SuperTensor, act_hecke, all_indices, gamma, multiplicities,
    multiplicity_factorial, parity,
)

__all__ = ["Params", "CHECKS", "Check", "run_check", "check_names"]


@dataclass(frozen=True)
class Params:
    mode: str = "quantum"
    m: int = 1
    n: int = 1
    d: int = 2
    k: int = 0
    specialize: Fraction | None = None
    dim_cap: int = DEFAULT_DIM_CAP

    @property
    def sig(self) -> SuperSig:
        return SuperSig(self.m, self.n)


@dataclass(frozen=True)
class Check:
    name: str
    description: str
    modes: tuple
    fn: Callable[[Params], tuple]


class Mismatch(Exception):
    pass


def _expect(cond: bool, what: str) -> None:
    if not cond:
        raise Mismatch(what)


# ------------------------------------------------------------------ inputs

def tensor_inputs(sig: SuperSig, degrees: Iterable[int], mode: str) -> list[ExtElement]:
    """e_I (x) 1 for every index I of the given degrees (rank = degree)."""
    out = []
    for d in degrees:
        if d == 0:
            out.append(ExtElement.unit(sig, mode))
            continue
        out += basis_elements(sig, d, d, mode)
    return out


def ext_inputs(sig: SuperSig, dmax: int, extra: int, mode: str) -> list[ExtElement]:
    """Normal-form basis elements with degree <= dmax and rank <= degree + extra."""
    out = [ExtElement.unit(sig, mode)]
    for d in range(0, dmax + 1):
        for N in range(max(d, 1), d + extra + 1):
            if d == 0 and N == 0:
                continue
            if d == 0:
                out += [ExtElement._raw(sig, mode, 0, N, {((), w): ONE})
                        for w in all_permutations(N)]
            else:
                out += basis_elements(sig, d, N, mode)
    return out


def _agree(lhs, rhs, inputs, label: str) -> int:
    count = 0
    for phi in inputs:
        a, b = lhs(phi), rhs(phi)
        if a != b:
            raise Mismatch(f"{label} fails on {phi}: {a} != {b}")
        count += 1
    return count


def _sign(sig: SuperSig, *idx) -> int:
    return -1 if all(parity(sig, i) for i in idx) else 1


# ------------------------------------------------------------------ checks

def check_hecke_relations(p: Params):
    """Quadratic, braid, far commutation and the three-term gamma identity."""
    N = max(p.d + p.k, 3)
    mode = p.mode
    one = HeckeElement.one(N, mode)
    T = [None] + [generator(i, N, mode) for i in range(1, N)]
    count = 0
    for i in range(1, N):
        if mode == "quantum":
            lhs = mul(T[i] - one.scale(Q), T[i] + one.scale(QINV))
        else:
            lhs = mul(T[i], T[i]) - one
        _expect(lhs.is_zero(), f"quadratic relation fails for T_{i}")
        _expect(mul(T[i], generator_power(i, -1, N, mode)) == one, f"T_{i} inverse")
        count += 2
        for j in range(1, N):
            if abs(i - j) >= 2:
                _expect(mul(T[i], T[j]) == mul(T[j], T[i]), f"T_{i}, T_{j} do not commute")
            if j == i + 1:
                _expect(mul(mul(T[i], T[j]), T[i]) == mul(mul(T[j], T[i]), T[j]),
                        f"braid relation fails for T_{i}, T_{j}")
            count += 1
    idx = range(1, p.m + p.n + 1)
    g = lambda a, b, r: generator_power(r, gamma(a, b), 3, mode)
    for a, b, c in iproduct(idx, repeat=3):
        lhs = mul(mul(g(a, b, 1), g(a, c, 2)), g(b, c, 1))
        rhs = mul(mul(g(b, c, 2), g(a, c, 1)), g(a, b, 2))
        _expect(lhs == rhs, f"three-term gamma identity fails at ({a},{b},{c})")
        count += 1
    return True, f"{count} relations in rank {N}"


def check_module_relations(p: Params):
    """Generators of H_d satisfy the Hecke relations acting on V^{(x)d}."""
    sig, mode = p.sig, p.mode
    count = 0
    for d in range(2, max(p.d, 3) + 1):
        T = lambda t, i, e=1: act_hecke(t, generator_power(i, e, d, mode))
        for I in all_indices(sig, d):
            t = SuperTensor.basis(sig, I)
            for i in range(1, d):
                ti = T(t, i)
                if mode == "quantum":
                    lhs = T(ti, i) - ti.scale(Q - QINV) - t
                else:
                    lhs = T(ti, i) - t
                _expect(lhs.is_zero(), f"quadratic relation fails for T_{i} on {t}")
                for j in range(1, d):
                    if j == i + 1:
                        _expect(T(T(T(t, i), j), i) == T(T(T(t, j), i), j),
                                f"braid relation fails for T_{i}, T_{j} on {t}")
                    if abs(i - j) >= 2:
                        _expect(T(T(t, i), j) == T(T(t, j), i), f"T_{i}, T_{j} on {t}")
                count += 1
    return True, f"{count} generator checks on tensors up to degree {max(p.d, 3)}"


def check_staircase(p: Params):
    """Unique reduced staircase factorization and coset normal forms."""
    count = 0
    for d in range(1, max(p.d + p.k, 2) + 1):
        for sigma in all_permutations(d):
            fs = staircase_decompose(sigma)
            prod = Permutation.identity(d)
            total = 0
            for f in fs:
                prod = prod * f
                total += f.length()
            _expect(prod == sigma and total == sigma.length(),
                    f"staircase factorization of {sigma} is not reduced")
            for sub in range(0, d + 1):
                u, w = coset_factorize(sigma, sub)
                _expect(u * w == sigma and u.fixes_above(sub) and is_minimal_coset_rep(w, sub)
                        and u.length() + w.length() == sigma.length(),
                        f"coset factorization of {sigma} over S_{sub}")
            count += 1
    return True, f"{count} permutations factorized"


def check_annihilation_hecke(p: Params):
    """L(e_j^*) commutes with right multiplication by every T_r."""
    sig, mode = p.sig, p.mode
    inputs = ext_inputs(sig, p.d, p.k + 1, mode)
    count = 0
    for phi in inputs:
        for r in range(1, phi.N):
            T = generator(r, phi.N, mode)
            for j in sig.indices():
                a = annihilation(j, right_act(phi, T))
                b = right_act(annihilation(j, phi), T)
                _expect(a == b, f"L(e_{j}*) and T_{r} do not commute on {phi}")
                count += 1
    return True, f"{count} commutators vanish"


def check_h_maps(p: Params):
    """Summands of L(e_j^*) against T_r: only k in {r, r+1} interact, and
    their sum commutes."""
    sig, mode = p.sig, "quantum"
    count = 0
    for d in range(2, max(p.d, 2) + 1):
        for I in all_indices(sig, d):
            t = SuperTensor.basis(sig, I)
            phi = ExtElement.from_tensor(t, mode)
            for r in range(1, d):
                Tr = generator(r, d, mode)
                tT = ExtElement.from_tensor(act_hecke(t, Tr), mode)
                for j in sig.indices():
                    for k in range(1, d + 1):
                        a = h_map(j, k, tT)
                        b = right_act(h_map(j, k, phi), Tr)
                        if k not in (r, r + 1):
                            _expect(a == b, f"h_{k} and T_{r} do not commute on {t}, j={j}")
                    pair_a = h_map(j, r, tT) + h_map(j, r + 1, tT)
                    pair_b = right_act(h_map(j, r, phi) + h_map(j, r + 1, phi), Tr)
                    _expect(pair_a == pair_b, f"h_{r} + h_{r + 1} and T_{r} on {t}, j={j}")
                    whole = sum((h_map(j, k, phi) for k in range(2, d + 1)), h_map(j, 1, phi))
                    _expect(whole == annihilation(j, phi), f"summands of L(e_{j}*) on {t}")
                    count += 1
    return True, f"{count} (tensor, r, j) cases"


def check_number_operator(p: Params):
    """L(e_j) L(e_j^*) = (K_j - K_j^-1)/(q_j - q_j^-1) on V^{(x)d}."""
    sig = p.sig
    inputs = tensor_inputs(sig, range(0, p.d + 1), "quantum")
    count = 0
    for j in sig.indices():
        qj = sig.q_i(j)
        scale = (qj - qj ** -1).inverse()
        count += _agree(lambda phi: creation(j, annihilation(j, phi)),
                        lambda phi: (K_apply(j, 1, phi) - K_apply(j, -1, phi)).scale(scale),
                        inputs, f"number operator for j={j}")
    return True, f"{count} tensors"


def check_matrix_units(p: Params):
    """rho_d(E_ij) = L(e_i) L(e_j^*) and sum_i L(e_i) L(e_i^*) = d."""
    sig = p.sig
    count = 0
    for phi in tensor_inputs(sig, range(1, p.d + 1), "classical"):
        for i in sig.indices():
            for j in sig.indices():
                _expect(act_classical_on_ext(i, j, phi) == creation(i, annihilation(j, phi)),
                        f"E_{i}{j} on {phi}")
                count += 1
    for phi in ext_inputs(sig, p.d, p.k + 1, "classical"):
        acc = ExtElement.zero(sig, "classical", phi.d, phi.N)
        for i in sig.indices():
            acc = acc + creation(i, annihilation(i, phi))
        _expect(acc == phi.scale(phi.d), f"degree count on {phi}")
        count += 1
    return True, f"{count} operator evaluations"


def check_commutation(p: Params):
    """Exchange relations among L(e_i), L(e_j^*) and left Hecke multiplication."""
    sig, mode = p.sig, p.mode
    inputs = ext_inputs(sig, min(p.d, 2), 1, mode)
    idx = list(sig.indices())
    count = 0
    if mode == "quantum":
        T = lambda e: generator_power(1, e, 2, mode)
        for i in idx:
            for j in idx:
                s = _sign(sig, i, j)
                c = sig.q_i(i) * s if i == j else as_ratfunc(s)
                g = gamma(i, j)
                count += _agree(L(i) @ L(j), (L(j) @ L(i) @ LT(T(g))).scaled(c), inputs,
                                f"creation exchange ({i},{j})")
                count += _agree(Lstar(i) @ Lstar(j), (LT(T(g)) @ Lstar(j) @ Lstar(i)).scaled(c),
                                inputs, f"annihilation exchange ({i},{j})")
                rhs = (L(j) @ LT(T(-g)) @ Lstar(i)).scaled(s)
                if i == j:
                    count += _agree(Lstar(i) @ L(j),
                                    lambda phi: rhs(phi) + K_apply(i, -1, phi), inputs,
                                    f"mixed exchange ({i},{j})")
                else:
                    count += _agree(Lstar(i) @ L(j), rhs, inputs, f"mixed exchange ({i},{j})")
        return True, f"{count} evaluations of the three exchange relations"
    s1 = basis_element(Permutation.s(1, 2), mode)
    for i in idx:
        for j in idx:
            s = _sign(sig, i, j)
            count += _agree(L(i) @ L(j), (L(j) @ L(i) @ LT(s1)).scaled(s), inputs,
                            f"creation exchange ({i},{j})")
            count += _agree(Lstar(i) @ Lstar(j), (LT(s1) @ Lstar(j) @ Lstar(i)).scaled(s),
                            inputs, f"annihilation exchange ({i},{j})")
            rhs = (L(i) @ LT(s1) @ Lstar(j)).scaled(s)
            count += _agree(Lstar(j) @ L(i),
                            (lambda phi: rhs(phi) + phi) if i == j else rhs, inputs,
                            f"mixed exchange ({i},{j})")
        for sigma in all_permutations(3):
            h = basis_element(sigma, mode)
            hu = basis_element(shift_up(sigma, 1), mode)
            count += _agree(LT(h) @ L(i), L(i) @ LT(hu), inputs, f"L(sigma) L(e_{i})")
            count += _agree(Lstar(i) @ LT(h), LT(hu) @ Lstar(i), inputs, f"L(e_{i}*) L(sigma)")
    return True, f"{count} evaluations of the five exchange relations"


def check_k_commutation(p: Params):
    """K_j against L(e_i), L(e_i^*) and L(T_k)."""
    sig = p.sig
    inputs = ext_inputs(sig, p.d, 1, "quantum")
    count = 0
    for j in sig.indices():
        qj = sig.q_i(j)
        Kj = lambda phi, j=j: K_apply(j, 1, phi)
        for i in sig.indices():
            c = qj if i == j else ONE
            count += _agree(lambda phi: Kj(creation(i, phi)),
                            lambda phi: creation(i, Kj(phi)).scale(c), inputs, f"K_{j} L(e_{i})")
            count += _agree(lambda phi: Kj(annihilation(i, phi)),
                            lambda phi: annihilation(i, Kj(phi)).scale(c.inverse()), inputs,
                            f"K_{j} L(e_{i}*)")
        for r in range(1, max(p.d, 2)):
            h = generator(r, r + 1, "quantum")
            count += _agree(lambda phi: Kj(LT(h)(phi)), lambda phi: LT(h)(Kj(phi)), inputs,
                            f"K_{j} L(T_{r})")
    return True, f"{count} evaluations"


def _stacked(op, inputs) -> dict:
    """Concatenate op(phi) over inputs into one sparse vector."""
    vec = {}
    for n, phi in enumerate(inputs):
        out = op(phi)
        for key, c in out.terms.items():
            vec[(n, key)] = c
    return vec


def _member(target: dict, spanning: list[dict]) -> bool:
    cols = {}
    for v in [target] + spanning:
        for key in v:
            cols.setdefault(key, len(cols))
    ech = Echelon()
    for v in spanning:
        ech.add({cols[k]: c for k, c in v.items()})
    return ech.contains({cols[k]: c for k, c in target.items()})


def check_triple(p: Params):
    """Moving L(e_i) past L(e_j) L(e_k^*): closed form (classical) or
    a fixed linear combination of four operators (quantum)."""
    sig, mode = p.sig, p.mode
    idx = list(sig.indices())
    count = 0
    if mode == "classical":
        inputs = ext_inputs(sig, min(p.d, 2), 1, mode)
        for i, j, k in iproduct(idx, repeat=3):
            s = -1 if parity(sig, i) and (parity(sig, j) + parity(sig, k)) % 2 else 1
            rhs = (L(j) @ Lstar(k) @ L(i)).scaled(s)
            if i == k:
                r0 = rhs
                rhs = lambda phi, r0=r0: r0(phi) - creation(j, phi).scale(s)
            count += _agree(L(i) @ L(j) @ Lstar(k), rhs, inputs, f"triple ({i},{j},{k})")
        return True, f"{count} evaluations"
    inputs = tensor_inputs(sig, range(0, min(p.d, 2) + 1), mode)
    for i, j, k in iproduct(idx, repeat=3):
        target = _stacked(L(i) @ L(j) @ Lstar(k), inputs)
        Kk = lambda phi, k=k: K_apply(k, -1, phi)
        spanning = [
            _stacked(L(i) @ Lstar(k) @ L(j), inputs),
            _stacked(L(j) @ Lstar(k) @ L(i), inputs),
            _stacked(lambda phi: Kk(creation(i, phi)), inputs),
            _stacked(lambda phi: Kk(creation(j, phi)), inputs),
        ]
        _expect(_member(target, spanning), f"no coefficients found for ({i},{j},{k})")
        count += 1
    return True, f"{count} index triples have a solution over Q(q)"


def check_euler(p: Params):
    """The Euler operator is the identity on degree-d elements."""
    sig, mode = p.sig, p.mode
    f = euler_quantum if mode == "quantum" else euler_classical
    count = 0
    for d in range(1, p.d + 1):
        for N in range(d, d + p.k + 1):
            for phi in basis_elements(sig, d, N, mode):
                _expect(f(d, phi) == phi, f"Euler operator on {phi}")
                count += 1
    return True, f"{count} basis elements fixed"


def check_symmetrizer(p: Params):
    """Reordered descending products return m(I)! e_I; on e_J they give
    m(I)! e_J when I and J have the same content and 0 otherwise."""
    sig, mode = p.sig, "classical"
    count = 0
    for d in range(1, p.d + 1):
        for I in all_indices(sig, d):
            phi = ExtElement.basis(sig, I, mode=mode)
            mi = multiplicity_factorial(sig, I)
            for tau in _itperms(range(d)):
                J = tuple(I[t] for t in tau)
                _expect(apply_descending(J, phi) == phi.scale(mi), f"reordered product on {I}")
                count += 1
            for J in all_indices(sig, d):
                out = apply_descending(I, ExtElement.basis(sig, J, mode=mode))
                if multiplicities(sig, I) == multiplicities(sig, J):
                    # the input e_J comes back, scaled by m(I)!
                    expect = ExtElement.basis(sig, J, mode=mode).scale(mi)
                else:
                    expect = ExtElement.zero(sig, mode, d, d)
                _expect(out == expect, f"descending product of {I} on {J}")
                count += 1
    return True, f"{count} evaluations"


def check_k_factorials(p: Params):
    """Repeated L(e_i)^h L(e_i^*)^h and ordered descending products as
    products of [K_j : a] factors."""
    sig = p.sig
    count = 0
    for d in range(0, p.d + 1):
        inputs = tensor_inputs(sig, [d], "quantum")
        for i in sig.indices():
            for h in range(0, d + 1):
                def lhs(phi, i=i, h=h):
                    for _ in range(h):
                        phi = annihilation(i, phi)
                    for _ in range(h):
                        phi = creation(i, phi)
                    return phi
                count += _agree(lhs, k_factorial_op(i, h), inputs, f"h-fold product, i={i}, h={h}")
        if d == 0:
            continue
        for I in increasing_indices(sig, d):
            def rhs(phi, I=I):
                for j, mj in zip(sig.indices(), multiplicities(sig, I)):
                    phi = k_factorial_op(j, mj)(phi)
                return phi
            count += _agree(lambda phi, I=I: apply_descending(I, phi), rhs, inputs,
                            f"descending product for {I}")
            for J in increasing_indices(sig, d):
                out = apply_descending(I, ExtElement.basis(sig, J))
                expect = (ExtElement.basis(sig, J).scale(q_multiplicity_factorial(sig, I))
                          if I == J else ExtElement.zero(sig, "quantum", d, d))
                _expect(out == expect, f"descending product of {I} on {J}")
                count += 1
    return True, f"{count} evaluations"


def check_uq_relations(p: Params):
    """Defining relations of U_q(gl(m|n)) under the tensor representation."""
    sig = p.sig
    fams = relation_families(sig)
    count = 0
    for d in range(1, min(p.d, 2) + 1):
        for fam in fams:
            _expect(check_relation(sig, fam, d), f"relation {fam} fails in degree {d}")
            count += 1
    return True, f"{len(fams)} relation families hold up to degree {min(p.d, 2)}"


def check_simple_roots(p: Params):
    """E_i K_i^-1 = L(e_i) L(e_{i+1}^*) and K_i F_i = L(e_{i+1}) L(e_i^*)."""
    sig = p.sig
    inputs = tensor_inputs(sig, range(1, p.d + 1), "quantum")
    count = 0
    for i in range(1, sig.dim):
        count += _agree(lambda phi: act_on_ext(UqExpr.gen(E(i), Kinv(i)), phi),
                        lambda phi: creation(i, annihilation(i + 1, phi)), inputs, f"E_{i} K_{i}^-1")
        count += _agree(lambda phi: act_on_ext(UqExpr.gen(K(i), F(i)), phi),
                        lambda phi: creation(i + 1, annihilation(i, phi)), inputs, f"K_{i} F_{i}")
    return True, f"{count} evaluations"


def _kron(sig, first, rest, t: SuperTensor) -> SuperTensor:
    """(X (x) Y)(e_k e_rest) = X(e_k) (x) Y(e_rest), with no extra sign."""
    out = SuperTensor(sig, t.degree)
    for I, c in t.terms.items():
        a = first(SuperTensor._raw(sig, 1, {I[:1]: ONE}))
        b = rest(SuperTensor._raw(sig, t.degree - 1, {I[1:]: ONE}))
        out = out + SuperTensor(sig, t.degree, {
            x + y: c * u * v for x, u in a.terms.items() for y, v in b.terms.items()})
    return out


def _lop(a, b):
    """Tensor-level operator L(e_a) L(e_b^*) restricted to V^{(x)d}."""
    def f(t: SuperTensor) -> SuperTensor:
        return creation(a, annihilation(b, ExtElement.from_tensor(t))).tensor_part()
    return f


def _kop(i, e):
    return lambda t: act_expr(UqExpr.gen(K(i) if e == 1 else Kinv(i)), t)


def check_ab_recursion(p: Params):
    """Splitting L(e_i)L(e_{i+1}^*) and L(e_{i+1})L(e_i^*) off the leftmost factor."""
    sig = p.sig
    count = 0
    for i in range(1, sig.dim):
        A, B = _lop(i, i + 1), _lop(i + 1, i)
        sgn = i == sig.m

        def twist(kop):
            def f(t):
                out = kop(t)
                if sgn:
                    out = SuperTensor._raw(sig, 1, {I: (-c if parity(sig, I[0]) else c)
                                                    for I, c in out.terms.items()})
                return out
            return f
        for d in range(2, max(p.d, 2) + 1):
            for I in all_indices(sig, d):
                t = SuperTensor.basis(sig, I)
                rhsA = _kron(sig, A, _kop(i + 1, -1), t) + _kron(sig, twist(_kop(i, -1)), A, t)
                _expect(A(t) == rhsA, f"A_{i} recursion on {t}")
                rhsB = _kron(sig, B, _kop(i, 1), t) + _kron(sig, twist(_kop(i + 1, 1)), B, t)
                _expect(B(t) == rhsB, f"B_{i} recursion on {t}")
                count += 2
    return True, f"{count} evaluations"


def check_composite_roots(p: Params):
    """E_ij K_i^-1 = L(e_i) L(e_j^*) and K_i E_ji = L(e_j) L(e_i^*) for i < j."""
    sig = p.sig
    inputs = tensor_inputs(sig, range(1, p.d + 1), "quantum")
    count = 0
    for i in sig.indices():
        for j in sig.indices():
            if i >= j:
                continue
            for k in (range(i + 1, j) if j - i > 1 else [None]):
                up = composite(sig, i, j, k) * UqExpr.gen(Kinv(i))
                down = UqExpr.gen(K(i)) * composite(sig, j, i, k)
                count += _agree(lambda phi: act_on_ext(up, phi),
                                lambda phi: creation(i, annihilation(j, phi)), inputs,
                                f"E_{i}{j} K_{i}^-1 (k={k})")
                count += _agree(lambda phi: act_on_ext(down, phi),
                                lambda phi: creation(j, annihilation(i, phi)), inputs,
                                f"K_{i} E_{j}{i} (k={k})")
    return True, f"{count} evaluations"


def check_action_hecke(p: Params):
    """K_i, E_i, F_i acting on the tensor factor commute with right
    multiplication by the Hecke generators."""
    sig = p.sig
    gens = [K(i) for i in sig.indices()] + [Kinv(i) for i in sig.indices()]
    gens += [E(i) for i in range(1, sig.dim)] + [F(i) for i in range(1, sig.dim)]
    count = 0
    for phi in ext_inputs(sig, p.d, p.k + 1, "quantum"):
        for r in range(1, phi.N):
            T = generator(r, phi.N, "quantum")
            for g in gens:
                _expect(act_on_ext(g, right_act(phi, T)) == right_act(act_on_ext(g, phi), T),
                        f"{g} and T_{r} on {phi}")
                count += 1
    return True, f"{count} commutators vanish"


def check_duality(p: Params):
    """Commutant of the Hecke action equals the creation/annihilation span,
    and the double commutant returns the Hecke image."""
    if p.d < 1 or not 0 <= p.k <= p.d:
        return None, "needs d >= 1 and 0 <= k <= d"
    try:
        r = verify_duality(p.m, p.n, p.d, p.k, p.mode, p.dim_cap,
                           p.specialize if p.mode == "quantum" else None)
    except ResourceCapError as exc:
        return None, str(exc)
    dims = r.dims()
    detail = ", ".join(f"{k}={v}" for k, v in dims.items())
    if r.dim_group_closure is not None:
        detail += f", group_closure={r.dim_group_closure}"
    if r.specialization is not None:
        detail += f", specialized at q={r.specialization['q']}: " + (
            "same dimensions" if r.specialization["consistent"] else
            f"dimensions differ {r.specialization['dims']}")
    return r.passed, detail, dims


_BOTH = ("quantum", "classical")
_Q = ("quantum",)
_C = ("classical",)

CHECKS = [
    Check("hecke-relations", "quadratic, braid and far-commutation relations; three-term gamma identity", _BOTH, check_hecke_relations),
    Check("module-relations", "Hecke relations hold for the action on tensor space", _BOTH, check_module_relations),
    Check("staircase-factorization", "staircase words are reduced; coset factorizations are length-additive", _BOTH, check_staircase),
    Check("annihilation-commutes-with-hecke", "L(e_j^*) commutes with right multiplication", _BOTH, check_annihilation_hecke),
    Check("annihilation-summands", "summands of L(e_j^*) against T_r", _Q, check_h_maps),
    Check("number-operator", "L(e_j)L(e_j^*) = (K_j - K_j^-1)/(q_j - q_j^-1)", _Q, check_number_operator),
    Check("matrix-unit-operators", "rho(E_ij) = L(e_i)L(e_j^*); sum of L(e_i)L(e_i^*) counts degree", _C, check_matrix_units),
    Check("exchange-relations", "exchange relations for creation, annihilation and Hecke multiplication", _BOTH, check_commutation),
    Check("k-commutation", "K_j against creation, annihilation and Hecke multiplication", _Q, check_k_commutation),
    Check("triple-products", "L(e_i)L(e_j)L(e_k^*) in terms of reordered products", _BOTH, check_triple),
    Check("euler-operator", "Euler operator acts as the identity", _BOTH, check_euler),
    Check("symmetrizer-multiplicity", "descending products give m(I)! on matching contents", _C, check_symmetrizer),
    Check("k-factorials", "creation/annihilation powers as products of [K_i : a]", _Q, check_k_factorials),
    Check("uq-relations", "defining relations of U_q(gl(m|n)) on tensor space", _Q, check_uq_relations),
    Check("simple-root-operators", "E_i K_i^-1 and K_i F_i as creation/annihilation products", _Q, check_simple_roots),
    Check("ab-recursion", "leftmost-factor recursion for L(e_i)L(e_{i+1}^*) and L(e_{i+1})L(e_i^*)", _Q, check_ab_recursion),
    Check("composite-root-operators", "E_ij K_i^-1 and K_i E_ji as creation/annihilation products", _Q, check_composite_roots),
    Check("action-commutes-with-hecke", "K, E, F on the tensor factor commute with right multiplication", _Q, check_action_hecke),
    Check("duality", "commutant, creation/annihilation span, bicommutant and Hecke image", _BOTH, check_duality),
]

_BY_NAME = {c.name: c for c in CHECKS}


def check_names() -> list[str]:
    return [c.name for c in CHECKS]


def run_check(name: str, params: Params) -> dict:
    """Run one check and return {"name", "status", "detail"} (plus dims for duality)."""
    if name not in _BY_NAME:
        raise KeyError(f"unknown check {name!r}")
    chk = _BY_NAME[name]
    if params.mode not in chk.modes:
        return {"name": name, "status": "skipped", "detail": f"only defined in {chk.modes[0]} mode"}
    try:
        res = chk.fn(params)
    except Mismatch as exc:
        return {"name": name, "status": "fail", "detail": str(exc)}
    ok, detail = res[0], res[1]
    out = {"name": name, "status": "skipped" if ok is None else ("pass" if ok else "fail"),
           "detail": detail}
    if len(res) > 2:
        out["dims"] = res[2]
    return out
