from itertools import product as iproduct

import pytest

from qschur.extension import ExtElement, basis_elements, normal_form, product, right_act
from qschur.hecke import basis_element, generator, generator_power
from qschur.operators import (
    K_apply, L, LT, Lstar, annihilation, annihilation_classical, annihilation_quantum,
    apply_descending, creation, euler_classical, euler_quantum, h_map, identity_op,
    increasing_indices, k_bracket, k_factorial, k_factorial_op, q_multiplicity_factorial,
)
from qschur.permutations import from_cycle
from qschur.qfield import ONE, Q, QINV, RatFunc, q_factorial
from qschur.superspace import SuperSig, SuperTensor, all_indices, entry, gamma, parity

SIG = SuperSig(1, 1)
SIGS = [SuperSig(1, 1), SuperSig(2, 1), SuperSig(1, 2)]


def ext(sig, *I, mode="quantum"):
    return ExtElement.basis(sig, I, mode=mode)


def literal_quantum_annihilation(j, sig, I, w):
    """Sum of g_j(e_{i_d}) ... g_j(e_{i_{k+1}}) f_j(e_{i_{k-1}}) ... f_j(e_{i_1}),
    with g_j(e_r) = e_r (x) T_1^{-gamma(j, r)} and f_j(e_r) = q_j^{-delta} e_r,
    multiplied out with the extension product, then times T_w."""
    d, N = len(I), w.rank
    total = ExtElement.zero(sig, "quantum", d - 1, N)
    for k in range(1, d + 1):
        if entry(I, k) != j:
            continue
        above = [entry(I, p) for p in range(d, k, -1)]
        below = [entry(I, p) for p in range(k - 1, 0, -1)]
        sign = -1 if parity(sig, j) and sum(parity(sig, r) for r in above) % 2 else 1
        word = ExtElement.unit(sig)
        for r in above:
            g = normal_form(sig, (r,), generator_power(1, -gamma(j, r), 2))
            word = product(word, g)
        for r in below:
            f = ext(sig, r).scale(sig.q_i(j) ** -(r == j))
            word = product(word, f)
        total = total + right_act(word, basis_element(w)).scale(sign)
    return total


def literal_classical_annihilation(j, sig, I, w):
    """Sum over k of the Koszul sign times e_I with i_k removed (x) (d ... k) w."""
    d = len(I)
    total = ExtElement.zero(sig, "classical", d - 1, w.rank)
    for k in range(1, d + 1):
        if entry(I, k) != j:
            continue
        slot = d - k
        sign = -1 if parity(sig, j) and sum(parity(sig, r) for r in I[:slot]) % 2 else 1
        cyc = from_cycle(list(range(d, k - 1, -1)), w.rank)
        rest = I[:slot] + I[slot + 1:]
        total = total + normal_form(sig, rest, basis_element(cyc * w, "classical")).scale(sign)
    return total


# ---------------------------------------------------------------- examples

def test_creation_examples():
    unit = ExtElement.unit(SIG)
    assert creation(1, unit) == ext(SIG, 1)
    assert right_act(creation(1, creation(1, unit)), generator(1, 2)) == ext(SIG, 1, 1).scale(Q)


def test_classical_annihilation_examples():
    c = lambda *I: ext(SIG, *I, mode="classical")
    assert annihilation_classical(1, c(1)) == ExtElement.unit(SIG, "classical", 1)
    assert annihilation_classical(1, c(2)).is_zero()
    assert annihilation_classical(1, c(1, 2)) == ExtElement.basis(SIG, (2,), mode="classical", N=2)
    with pytest.raises(ValueError):
        annihilation_classical(1, ext(SIG, 1))


def test_quantum_annihilation_examples():
    for j in (1, 2):
        assert annihilation_quantum(j, ext(SIG, j)) == ExtElement.unit(SIG, N=1)
    assert creation(1, annihilation(1, ext(SIG, 1))) == ext(SIG, 1)
    assert creation(1, annihilation(1, ext(SIG, 2))).is_zero()
    with pytest.raises(ValueError):
        annihilation_quantum(1, ext(SIG, 1, mode="classical"))


def test_annihilation_of_degree_zero_is_zero():
    assert annihilation(1, ExtElement.unit(SIG)).is_zero()


@pytest.mark.parametrize("sig", SIGS)
def test_quantum_annihilation_matches_literal_word(sig):
    for d in (1, 2, 3):
        for N in range(d, min(d + 1, 4) + 1):
            for phi in basis_elements(sig, d, N):
                (I, w), = phi.terms
                for j in sig.indices():
                    assert annihilation(j, phi) == literal_quantum_annihilation(j, sig, I, w)


@pytest.mark.parametrize("sig", SIGS)
def test_classical_annihilation_matches_cycle_formula(sig):
    for d in (1, 2, 3):
        for N in range(d, min(d + 1, 4) + 1):
            for phi in basis_elements(sig, d, N, "classical"):
                (I, w), = phi.terms
                for j in sig.indices():
                    assert annihilation(j, phi) == literal_classical_annihilation(j, sig, I, w)


@pytest.mark.parametrize("sig", SIGS)
def test_h_maps(sig):
    for d in (2, 3):
        for I in all_indices(sig, d):
            t = SuperTensor.basis(sig, I)
            phi = ExtElement.from_tensor(t)
            for j in sig.indices():
                total = h_map(j, 1, t)
                for k in range(2, d + 1):
                    total = total + h_map(j, k, t)
                assert total == annihilation(j, phi)
                for r in range(1, d):
                    T = generator(r, d)
                    moved = right_act(phi, T)
                    for k in range(1, d + 1):
                        same = h_map(j, k, moved) == right_act(h_map(j, k, phi), T)
                        if k not in (r, r + 1):
                            assert same
                    pair = lambda x: h_map(j, r, x) + h_map(j, r + 1, x)
                    assert pair(moved) == right_act(pair(phi), T)


def test_h_map_position_error():
    with pytest.raises(ValueError):
        h_map(1, 3, SuperTensor.basis(SIG, (1, 2)))


def test_creation_exchange_relation():
    for i, j in iproduct((1, 2), repeat=2):
        sign = -1 if parity(SIG, i) and parity(SIG, j) else 1
        c = (SIG.q_i(i) if i == j else ONE) * sign
        rhs = (L(j) @ L(i) @ LT(generator_power(1, gamma(i, j), 2))).scaled(c)
        for phi in basis_elements(SIG, 1, 2) + basis_elements(SIG, 2, 2):
            assert (L(i) @ L(j))(phi) == rhs(phi)


# ---------------------------------------------------------------- Euler

def test_euler_examples():
    assert euler_classical(1, ext(SIG, 1, mode="classical")) == ext(SIG, 1, mode="classical")
    assert euler_quantum(1, ext(SIG, 1)) == ext(SIG, 1)
    for phi in basis_elements(SIG, 2, 3, "classical"):
        assert euler_classical(2, phi) == phi
    for phi in basis_elements(SIG, 1, 2) + basis_elements(SIG, 2, 3):
        assert euler_quantum(phi.d, phi) == phi


def test_number_operator_sum_counts_degree():
    for phi in basis_elements(SIG, 2, 3, "classical"):
        acc = ExtElement.zero(SIG, "classical", 2, 3)
        for i in SIG.indices():
            acc = acc + creation(i, annihilation(i, phi))
        assert acc == phi.scale(2)


@pytest.mark.parametrize("sig", [SuperSig(1, 1), SuperSig(2, 0), SuperSig(0, 2)])
def test_descending_products_separate_contents(sig):
    for d in (1, 2, 3):
        for I in increasing_indices(sig, d):
            for J in increasing_indices(sig, d):
                out = apply_descending(I, ext(sig, *J))
                if I == J:
                    assert out == ext(sig, *J).scale(q_multiplicity_factorial(sig, I))
                else:
                    assert out.is_zero()


# ---------------------------------------------------------------- K brackets

def test_k_bracket_examples():
    e1 = SuperTensor.basis(SIG, (1,))
    assert k_bracket(1, 0, e1) == e1
    assert k_bracket(2, 0, e1).is_zero()
    e11 = SuperTensor.basis(SIG, (1, 1))
    assert k_bracket(1, 0, e11) == e11.scale(Q + QINV)
    assert k_factorial(1, 2, e11) == e11.scale(q_factorial(2))
    assert k_factorial(1, 0, e11) == e11


def test_k_factorial_kills_small_multiplicities():
    sig = SuperSig(2, 1)
    for d in (1, 2, 3):
        for J in all_indices(sig, d):
            t = SuperTensor.basis(sig, J)
            for i in sig.indices():
                have = sum(1 for x in J if x == i)
                for h in range(have + 1, d + 1):
                    assert k_factorial(i, h, t).is_zero()


@pytest.mark.parametrize("sig", SIGS)
def test_powers_of_number_operator(sig):
    for d in (1, 2, 3):
        for I in all_indices(sig, d):
            phi = ext(sig, *I)
            for i in sig.indices():
                for h in range(0, d + 1):
                    out = phi
                    for _ in range(h):
                        out = annihilation(i, out)
                    for _ in range(h):
                        out = creation(i, out)
                    assert out == k_factorial_op(i, h)(phi)


def test_k_commutes_as_expected():
    for phi in basis_elements(SIG, 1, 2) + basis_elements(SIG, 2, 2):
        for i, j in iproduct((1, 2), repeat=2):
            c = SIG.q_i(j) if i == j else ONE
            assert K_apply(j, 1, creation(i, phi)) == creation(i, K_apply(j, 1, phi)).scale(c)


def test_operator_algebra():
    op = identity_op() + L(1) @ Lstar(1)
    phi = ext(SIG, 1)
    assert op(phi) == phi.scale(2)
    assert (op - identity_op())(phi) == phi
    assert (RatFunc(3) * identity_op())(phi) == phi.scale(3)
    with pytest.raises(ValueError):
        L(1) + Lstar(1)
