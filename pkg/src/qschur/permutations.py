"""Symmetric groups in one-line notation.

Points are 1-based.  Composition is (sigma * tau)(i) = sigma(tau(i)) everywhere
in the package, and s_i swaps i and i+1.  A word [a1, ..., al] stands for the
product s_a1 s_a2 ... s_al.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _itperms
from typing import Iterable, Sequence

__all__ = [
    "Permutation", "from_cycle", "reduced_word", "staircase_decompose",
    "coset_factorize", "shift_up", "minimal_coset_reps", "all_permutations",
    "parse_cycles", "from_word",
]


@dataclass(frozen=True)
class Permutation:
    images: tuple

    def __post_init__(self):
        imgs = tuple(self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of [1..{len(imgs)}]: {imgs}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return _identity(n)

    @classmethod
    def s(cls, i: int, n: int) -> "Permutation":
        """The simple transposition s_i in S_n."""
        if not 1 <= i < n:
            raise ValueError(f"s_{i} is not a generator of S_{n}")
        imgs = list(range(1, n + 1))
        imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
        return cls(tuple(imgs))

    @property
    def rank(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.rank != other.rank:
            n = max(self.rank, other.rank)
            return self.widen(n) * other.widen(n)
        a = self.images
        return _unsafe(tuple(a[x - 1] for x in other.images))

    def inverse(self) -> "Permutation":
        out = [0] * self.rank
        for i, x in enumerate(self.images, 1):
            out[x - 1] = i
        return _unsafe(tuple(out))

    def length(self) -> int:
        """Coxeter length, i.e. the number of inversions."""
        return _length(self.images)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    def widen(self, n: int) -> "Permutation":
        if n < self.rank:
            raise ValueError(f"cannot narrow rank {self.rank} to {n}")
        if n == self.rank:
            return self
        return _unsafe(self.images + tuple(range(self.rank + 1, n + 1)))

    def fixes_above(self, d: int) -> bool:
        return all(self.images[i - 1] == i for i in range(d + 1, self.rank + 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(1, self.rank + 1):
            if i in seen or self(i) == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_str(self) -> str:
        cs = self.cycles()
        if not cs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def _unsafe(imgs: tuple) -> Permutation:
    p = object.__new__(Permutation)
    object.__setattr__(p, "images", imgs)
    return p


@lru_cache(maxsize=None)
def _identity(n: int) -> Permutation:
    return _unsafe(tuple(range(1, n + 1)))


def _length(imgs: tuple) -> int:
    n = len(imgs)
    return sum(1 for a in range(n) for b in range(a + 1, n) if imgs[a] > imgs[b])


def all_permutations(n: int) -> list[Permutation]:
    """All of S_n, ordered by length then one-line notation."""
    return list(_all_perms(n))


@lru_cache(maxsize=None)
def _all_perms(n: int) -> tuple:
    ps = [_unsafe(p) for p in _itperms(range(1, n + 1))]
    ps.sort(key=lambda p: (p.length(), p.images))
    return tuple(ps)


def from_cycle(entries: Sequence[int], n: int) -> Permutation:
    """Cycle (i1 i2 ... ik): i_r -> i_{r+1}, i_k -> i_1."""
    entries = list(entries)
    if len(set(entries)) != len(entries):
        raise ValueError(f"repeated entry in cycle {entries}")
    if any(not 1 <= x <= n for x in entries):
        raise ValueError(f"cycle {entries} out of range for rank {n}")
    imgs = list(range(1, n + 1))
    for a, b in zip(entries, entries[1:] + entries[:1]):
        imgs[a - 1] = b
    return _unsafe(tuple(imgs))


def from_word(word: Iterable[int], n: int) -> Permutation:
    out = Permutation.identity(n)
    for i in word:
        out = out * Permutation.s(i, n)
    return out


def parse_cycles(text: str, n: int | None = None) -> Permutation:
    """Parse cycle notation such as "(1 2 3)(5 6)"; "()" is the identity."""
    groups = re.findall(r"\(([^()]*)\)", text)
    if re.sub(r"\([^()]*\)", "", text).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = [[int(x) for x in g.replace(",", " ").split()] for g in groups]
    top = max((x for c in cycles for x in c), default=0)
    n = top if n is None else n
    out = Permutation.identity(n)
    for c in cycles:
        out = out * from_cycle(c, n)
    return out


def reduced_word(sigma: Permutation) -> list[int]:
    """A reduced word for sigma, found by repeatedly removing right descents."""
    return list(_reduced_word(sigma.images))


@lru_cache(maxsize=None)
def _reduced_word(imgs: tuple) -> tuple:
    w = list(imgs)
    rev = []
    i = 0
    while i < len(w) - 1:
        if w[i] > w[i + 1]:
            w[i], w[i + 1] = w[i + 1], w[i]
            rev.append(i + 1)
            i = max(i - 1, 0)
        else:
            i += 1
    return tuple(reversed(rev))


def staircase_decompose(sigma: Permutation) -> list[Permutation]:
    """Factor sigma in S_d as sigma_1 sigma_2 ... sigma_{d-1}.

    Each sigma_i is one of 1, s_i, s_i s_{i-1}, ..., s_i ... s_1, and the
    concatenated word is reduced.
    """
    d = sigma.rank
    factors = []
    rest = sigma
    for top in range(d, 1, -1):
        j = rest.inverse()(top)
        # sigma_{top-1} = s_{top-1} s_{top-2} ... s_j
        f = from_word(range(top - 1, j - 1, -1), d)
        factors.append(f)
        rest = rest * f.inverse()
    assert rest.is_identity()
    return factors[::-1]


def coset_factorize(sigma: Permutation, d: int) -> tuple[Permutation, Permutation]:
    """Split sigma = u * w with u in S_d and w shortest in the coset S_d sigma.

    S_d permutes the values 1..d, so w is obtained from sigma by rewriting
    those values in increasing order of position; lengths add up.
    """
    u, w = _coset_factorize(sigma.images, d)
    return _unsafe(u), _unsafe(w)


@lru_cache(maxsize=None)
def _coset_factorize(imgs: tuple, d: int) -> tuple:
    n = len(imgs)
    if d > n:
        raise ValueError(f"subgroup rank {d} exceeds rank {n}")
    w = list(imgs)
    nxt = 1
    for p in range(n):
        if imgs[p] <= d:
            w[p] = nxt
            nxt += 1
    winv = [0] * n
    for p, x in enumerate(w, 1):
        winv[x - 1] = p
    u = tuple(imgs[winv[x] - 1] for x in range(n))
    return u, tuple(w)


def is_minimal_coset_rep(w: Permutation, d: int) -> bool:
    pos = w.inverse().images
    return all(pos[i] < pos[i + 1] for i in range(d - 1))


def minimal_coset_reps(d: int, n: int) -> list[Permutation]:
    """Shortest representatives of the right cosets S_d \\ S_n."""
    return list(_min_reps(d, n))


@lru_cache(maxsize=None)
def _min_reps(d: int, n: int) -> tuple:
    if d > n:
        raise ValueError(f"subgroup rank {d} exceeds rank {n}")
    return tuple(w for w in _all_perms(n) if is_minimal_coset_rep(w, d))


def shift_up(sigma: Permutation, k: int) -> Permutation:
    """Image under s_i -> s_{i+k}; the first k points are fixed."""
    if k < 0:
        raise ValueError("shift must be nonnegative")
    return _unsafe(tuple(range(1, k + 1)) + tuple(x + k for x in sigma.images))
