import random
from math import factorial

import pytest

from qschur.extension import (
    ExtElement, basis_elements, coordinates, ext_basis, normal_form, product, right_act,
)
from qschur.hecke import HeckeElement, basis_element, generator, generator_power
from qschur.permutations import Permutation, all_permutations
from qschur.qfield import Q, QINV, RatFunc
from qschur.superspace import SuperSig, SuperTensor, act_hecke, all_indices

SIG = SuperSig(1, 1)
MODES = ["quantum", "classical"]


def s(i, n):
    return Permutation.s(i, n)


def hecke_one(n, mode="quantum"):
    return HeckeElement.one(n, mode)


def test_normal_form_examples():
    e = ExtElement.basis(SIG, (1, 1))
    assert normal_form(SIG, (1, 1), generator(1, 2)) == e.scale(Q)
    assert normal_form(SIG, (1, 2), hecke_one(2)) == ExtElement.basis(SIG, (1, 2))
    t = act_hecke(SuperTensor.basis(SIG, (2, 1)), generator(1, 2))
    assert normal_form(SIG, (2, 1), generator(1, 2)) == ExtElement.from_tensor(t)


def test_normal_form_rejects_mode_mismatch():
    with pytest.raises(ValueError):
        normal_form(SIG, (1,), hecke_one(1, "classical"), "quantum")


@pytest.mark.parametrize("mode", MODES)
@pytest.mark.parametrize("d,N", [(1, 3), (2, 3), (2, 4)])
def test_balanced_tensor(mode, d, N):
    """e_I (x) (h T_sigma) equals (e_I . h) (x) T_sigma for h in H_d."""
    sig = SuperSig(1, 1)
    sub = [basis_element(u, mode) for u in all_permutations(d)]
    for I in all_indices(sig, d):
        for h in sub:
            left = act_hecke(SuperTensor.basis(sig, I), h)
            for sigma in all_permutations(N):
                Ts = basis_element(sigma, mode)
                lhs = normal_form(sig, I, h.widen(N) * Ts, mode)
                rhs = ExtElement.zero(sig, mode, d, N)
                for J, c in left.terms.items():
                    rhs = rhs + normal_form(sig, J, Ts, mode).scale(c)
                assert lhs == rhs


def test_normal_form_invariant_under_relations():
    for i in (1, 2):
        loop = generator(i, 3) * generator_power(i, -1, 3)
        for sigma in all_permutations(3):
            h = basis_element(sigma)
            assert normal_form(SIG, (2, 1), h * loop) == normal_form(SIG, (2, 1), h)


@pytest.mark.parametrize("mode", MODES)
def test_product_examples(mode):
    for i in (1, 2):
        for j in (1, 2):
            left = ExtElement.basis(SIG, (), s(i, i + 1), mode)
            right = ExtElement.basis(SIG, (j,), mode=mode)
            assert product(left, right) == ExtElement.basis(SIG, (j,), s(i + 1, i + 2), mode)
    a, b = basis_element(s(1, 3), mode), basis_element(s(2, 3) * s(1, 3), mode)
    lhs = ExtElement.basis(SIG, (), s(1, 3), mode) * ExtElement.basis(SIG, (), s(2, 3) * s(1, 3), mode)
    assert lhs == normal_form(SIG, (), a * b, mode)


def test_odd_square_acted_by_generator():
    e2 = ExtElement.basis(SIG, (2,))
    sq = e2 * e2
    assert sq == ExtElement.basis(SIG, (2, 2))
    assert right_act(sq, generator(1, 2)) == sq.scale(-QINV)


def test_right_act_examples():
    e = ExtElement.basis(SIG, (1, 1))
    assert right_act(e, hecke_one(2)) == e
    assert right_act(e, generator(1, 2)) == e.scale(Q)
    for I in all_indices(SIG, 2):
        out = right_act(ExtElement.basis(SIG, I), generator(2, 3))
        assert out.terms == {(I, s(2, 3)): RatFunc(1)}


@pytest.mark.parametrize("mode", MODES)
def test_right_act_is_an_action(mode):
    gens = [generator(i, 3, mode) for i in (1, 2)] + [hecke_one(3, mode)]
    for phi in basis_elements(SIG, 2, 3, mode):
        for g in gens:
            for h in gens:
                assert right_act(phi, g * h) == right_act(right_act(phi, g), h)


@pytest.mark.parametrize("d,k", [(d, k) for d in range(0, 4) for k in range(0, 3)])
def test_module_dimension(d, k):
    for sig in (SuperSig(1, 1), SuperSig(2, 1)):
        keys = ext_basis(sig, d, d + k)
        assert len(keys) == len(set(keys)) == sig.dim ** d * factorial(d + k) // factorial(d)


@pytest.mark.parametrize("mode", MODES)
def test_normal_forms_span_the_induced_module(mode):
    # every e_I (x) T_sigma lands in the span of the listed basis
    keys = ext_basis(SIG, 2, 4)
    for I in all_indices(SIG, 2):
        for sigma in all_permutations(4):
            phi = ExtElement.basis(SIG, I, sigma, mode)
            coords = coordinates(phi, keys)
            assert sum(1 for c in coords if c) == len(phi.terms)


def _random_element(rng, sig, d, N, mode):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        I = tuple(rng.randint(1, sig.dim) for _ in range(d))
        w = rng.choice(all_permutations(N))
        terms[(I, w)] = rng.randint(-2, 2)
    return ExtElement(sig, mode, d, N, terms)


@pytest.mark.parametrize("mode", MODES)
def test_product_associative(mode):
    rng = random.Random(7)
    for _ in range(25):
        parts = []
        for _ in range(3):
            d = rng.randint(0, 2)
            parts.append(_random_element(rng, SIG, d, d + rng.randint(0, 1), mode))
        a, b, c = parts
        assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("mode", MODES)
def test_product_commutes_with_right_action(mode):
    rng = random.Random(3)
    for _ in range(15):
        a = _random_element(rng, SIG, 1, 2, mode)
        b = _random_element(rng, SIG, 1, 1, mode)
        N = (a * b).N
        for i in range(1, N):
            T = generator(i, N, mode)
            assert right_act(a * b, T) == a * right_act(b.widen(N), T)


def test_widen_and_degree_errors():
    e = ExtElement.basis(SIG, (1, 2))
    assert e.widen(4).N == 4
    with pytest.raises(ValueError):
        e.widen(4).widen(2)
    with pytest.raises(ValueError):
        e + ExtElement.basis(SIG, (1,))
    with pytest.raises(ValueError):
        ExtElement(SIG, "quantum", 2, 1, {})
