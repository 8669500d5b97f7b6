"""Exact computations with Hecke algebras, super tensor spaces and their centralizers."""

from .qfield import RatFunc, Q, QINV, ONE, ZERO, q_int, q_factorial, specialize
from .permutations import Permutation
from .hecke import HeckeElement
from .superspace import SuperSig, SuperTensor
from .extension import ExtElement

__all__ = [
    "RatFunc", "Q", "QINV", "ONE", "ZERO", "q_int", "q_factorial", "specialize",
    "Permutation", "HeckeElement", "SuperSig", "SuperTensor", "ExtElement",
]
