"""Exact linear algebra for commutants, algebra closures and duality checks.

Matrices hold RatFunc entries (or Fractions after specializing q).  All
elimination is sparse and deterministic: rows are reduced in the order they
arrive, the pivot of a row is its first nonzero column, and the reduced
basis is kept in fully reduced echelon form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from typing import Callable, Iterable, Sequence

from .extension import ExtElement, ext_basis
from .glmn import E, F, K, Kinv, act_classical_on_ext, act_on_ext
from .hecke import HeckeElement, generator
from .operators import annihilation, creation, hecke_left
from .permutations import all_permutations
from .qfield import ONE, ZERO, q_int, specialize as _spec_value
from .superspace import SuperSig

__all__ = [
    "ExactMatrix", "to_matrix", "Echelon", "kernel", "rank", "commutant",
    "algebra_closure", "span_dimension", "span_Adk", "hecke_image",
    "DualityReport", "verify_duality", "ResourceCapError", "DEFAULT_DIM_CAP",
    "module_basis", "check_specialization_point",
]

DEFAULT_DIM_CAP = 64


class ResourceCapError(RuntimeError):
    """Raised when a module is larger than the configured dimension cap."""


# ------------------------------------------------------------------ matrices

class ExactMatrix:
    """Dense rows x cols grid of exact scalars."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence], cols: int | None = None):
        self.entries = [list(r) for r in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else (cols or 0)
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, rows: int, cols: int, zero=ZERO) -> "ExactMatrix":
        return cls([[zero] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int, one=ONE, zero=ZERO) -> "ExactMatrix":
        return cls([[one if r == c else zero for c in range(n)] for r in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int, zero=ZERO) -> "ExactMatrix":
        return cls([[col[r] for col in columns] for r in range(rows)], len(columns))

    @classmethod
    def from_vector(cls, vec: Sequence, rows: int, cols: int) -> "ExactMatrix":
        return cls([list(vec[r * cols:(r + 1) * cols]) for r in range(rows)], cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        ocols = [[row[c] for row in other.entries] for c in range(other.cols)]
        for row in self.entries:
            nz = [(k, x) for k, x in enumerate(row) if x]
            line = []
            for col in ocols:
                acc = None
                for k, x in nz:
                    y = col[k]
                    if y:
                        acc = x * y if acc is None else acc + x * y
                line.append(acc if acc is not None else _zero_like(self, other))
            out.append(line)
        return ExactMatrix(out, other.cols)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix([[a + b for a, b in zip(r, s)]
                            for r, s in zip(self.entries, other.entries)], self.cols)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix([[a - b for a, b in zip(r, s)]
                            for r, s in zip(self.entries, other.entries)], self.cols)

    def scale(self, c) -> "ExactMatrix":
        return ExactMatrix([[c * x for x in r] for r in self.entries], self.cols)

    def _same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for r, s in zip(self.entries, other.entries) for a, b in zip(r, s))

    def is_zero(self) -> bool:
        return not any(x for r in self.entries for x in r)

    def flat(self) -> list:
        return [x for r in self.entries for x in r]

    def sparse_flat(self) -> dict:
        return {r * self.cols + c: x for r, row in enumerate(self.entries)
                for c, x in enumerate(row) if x}

    def specialize(self, a: Fraction) -> "ExactMatrix":
        """Evaluate every entry at q = a."""
        return ExactMatrix([[_spec_value(x, a) for x in r] for r in self.entries], self.cols)

    def commutes_with(self, other: "ExactMatrix") -> bool:
        return (self @ other - other @ self).is_zero()

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.entries)


def _zero_like(a: ExactMatrix, b: ExactMatrix):
    for m in (a, b):
        for r in m.entries:
            for x in r:
                return x - x
    return ZERO


def module_basis(sig: SuperSig, d: int, k: int) -> list[tuple]:
    """Normal-form keys of V^{(x)d} (x)_{H_d} H_{d+k}."""
    return ext_basis(sig, d, d + k)


def to_matrix(op: Callable[[ExtElement], ExtElement], sig: SuperSig, mode: str,
              domain: list[tuple], codomain: list[tuple] | None = None) -> ExactMatrix:
    """Column j = coordinates of op(basis_j) in the codomain basis."""
    codomain = domain if codomain is None else codomain
    pos = {key: i for i, key in enumerate(codomain)}
    if not domain:
        return ExactMatrix([[] for _ in codomain], 0)
    d_in = len(domain[0][0])
    N = max(w.rank for _, w in domain)
    N_out = max((w.rank for _, w in codomain), default=N)
    d_out = len(codomain[0][0]) if codomain else 0
    cols = []
    for key in domain:
        phi = ExtElement._raw(sig, mode, d_in, N, {key: ONE})
        img = op(phi)
        if img.terms and img.d != d_out:
            raise ValueError(f"operator maps degree {d_in} to {img.d}, expected {d_out}")
        if img.N < N_out:
            img = img.widen(N_out)
        elif img.N > N_out and img.terms:
            raise ValueError(f"operator leaves the module: rank {img.N} > {N_out}")
        col = [ZERO] * len(codomain)
        for t, c in img.terms.items():
            if t not in pos:
                raise ValueError(f"term {t} outside the codomain basis")
            col[pos[t]] = c
        cols.append(col)
    return ExactMatrix.from_columns(cols, len(codomain))


# ------------------------------------------------------------------ elimination

class Echelon:
    """Incrementally maintained reduced echelon basis of sparse vectors."""

    def __init__(self):
        self.rows: dict[int, dict] = {}      # pivot column -> row with 1 at pivot

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Remainder of vec modulo the span; pivot rows never share pivot columns."""
        v = dict(vec)
        for p in [c for c in v if c in self.rows]:
            c = v.get(p)
            if not c:
                continue
            for col, x in self.rows[p].items():
                y = v.get(col)
                s = -c * x if y is None else y - c * x
                if s:
                    v[col] = s
                else:
                    v.pop(col, None)
        return v

    def add(self, vec: dict) -> bool:
        """Insert vec; return True if it was independent of the current span."""
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        inv = v[p]
        v = {c: x / inv for c, x in v.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                for col, x in v.items():
                    y = row.get(col)
                    s = -c * x if y is None else y - c * x
                    if s:
                        row[col] = s
                    else:
                        row.pop(col, None)
        self.rows[p] = v
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def rank(vectors: Iterable[dict]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return len(ech)


def kernel(equations: Iterable[dict], nvars: int, one=ONE) -> list[dict]:
    """Basis of {x : e . x = 0 for all e}, one vector per free variable."""
    ech = Echelon()
    for e in equations:
        ech.add(e)
    pivots = ech.rows
    free = [c for c in range(nvars) if c not in pivots]
    basis = []
    for f in free:
        v = {f: one}
        for p, row in pivots.items():
            x = row.get(f)
            if x:
                v[p] = -x
        basis.append(v)
    return basis


def _commutator_equations(A: ExactMatrix, s: int) -> list[dict]:
    """Rows of X A - A X = 0 in the unknowns X[a][c] -> a*s + c."""
    eqs = []
    Acols = [[(r, A.entries[r][c]) for r in range(s) if A.entries[r][c]] for c in range(s)]
    Arows = [[(c, A.entries[r][c]) for c in range(s) if A.entries[r][c]] for r in range(s)]
    for a in range(s):
        for b in range(s):
            eq: dict = {}
            for c, x in Acols[b]:            # (X A)[a][b] = sum_c X[a][c] A[c][b]
                _acc(eq, a * s + c, x)
            for c, x in Arows[a]:            # (A X)[a][b] = sum_c A[a][c] X[c][b]
                _acc(eq, c * s + b, -x)
            if eq:
                eqs.append(eq)
    return eqs


def _acc(d: dict, k, x):
    y = d.get(k)
    s = x if y is None else y + x
    if s:
        d[k] = s
    else:
        d.pop(k, None)


def _one_of(mats: Sequence[ExactMatrix]):
    for m in mats:
        for r in m.entries:
            for x in r:
                if x:
                    return x / x
    return ONE


def commutant(actions: Sequence[ExactMatrix], size: int | None = None) -> tuple[int, list[ExactMatrix]]:
    """All X with X A = A X for every A in actions."""
    if not actions and size is None:
        raise ValueError("need at least one matrix or an explicit size")
    s = actions[0].rows if actions else size
    for A in actions:
        if A.rows != s or A.cols != s:
            raise ValueError(f"size mismatch: expected {s}x{s}, got {A.rows}x{A.cols}")
    one = _one_of(actions)
    zero = one - one
    eqs = [eq for A in actions for eq in _commutator_equations(A, s)]
    basis = kernel(eqs, s * s, one)
    mats = [ExactMatrix.from_vector([v.get(i, zero) for i in range(s * s)], s, s) for v in basis]
    return len(mats), mats


def span_dimension(mats: Iterable[ExactMatrix]) -> tuple[int, list[ExactMatrix]]:
    """Dimension of the linear span together with an independent subset."""
    ech = Echelon()
    kept = []
    for M in mats:
        if ech.add(M.sparse_flat()):
            kept.append(M)
    return len(kept), kept


def algebra_closure(generators: Sequence[ExactMatrix], size: int | None = None,
                    one=None) -> tuple[int, list[ExactMatrix]]:
    """Smallest unital subalgebra containing the generators."""
    if not generators and size is None:
        return 1, []
    s = generators[0].rows if generators else size
    if one is None:
        one = _one_of(generators)
    zero = one - one
    ident = ExactMatrix.identity(s, one, zero)
    ech = Echelon()
    ech.add(ident.sparse_flat())
    basis = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for B in frontier:
            for G in generators:
                P = G @ B
                if ech.add(P.sparse_flat()):
                    basis.append(P)
                    nxt.append(P)
        frontier = nxt
    return len(basis), basis


# ------------------------------------------------------------------ duality

def hecke_generator_matrices(sig: SuperSig, d: int, k: int, mode: str,
                             keys: list[tuple] | None = None) -> list[ExactMatrix]:
    """pi(T_r) for r = 1 .. d+k-1 (right multiplication)."""
    from .extension import right_act
    N = d + k
    keys = module_basis(sig, d, k) if keys is None else keys
    return [to_matrix(lambda phi, r=r: right_act(phi, generator(r, N, mode)), sig, mode, keys)
            for r in range(1, N)]


def hecke_image(sig: SuperSig, d: int, k: int, mode: str,
                keys: list[tuple] | None = None) -> tuple[int, list[ExactMatrix]]:
    """Span of pi(T_w) over all w in S_{d+k}."""
    from .extension import right_act
    N = d + k
    keys = module_basis(sig, d, k) if keys is None else keys
    mats = (to_matrix(lambda phi, w=w: right_act(phi, HeckeElement._raw({w: ONE}, N, mode)),
                      sig, mode, keys)
            for w in all_permutations(N))
    return span_dimension(mats)


def _annihilation_chain(sig, mode, d, N, keys, I) -> ExactMatrix:
    """L(e_{i_1}^*) ... L(e_{i_d}^*) from the module to degree 0, I = (i_d, ..., i_1)."""
    deg0 = [((), w) for w in all_permutations(N)]

    def op(phi):
        for j in I:
            phi = annihilation(j, phi)
        return phi
    return to_matrix(op, sig, mode, keys, deg0)


def _creation_chain(sig, mode, d, N, keys, J) -> ExactMatrix:
    """L(e_{j_d}) ... L(e_{j_1}) from degree 0 to the module, J = (j_d, ..., j_1)."""
    deg0 = [((), w) for w in all_permutations(N)]

    def op(phi):
        for j in reversed(J):
            phi = creation(j, phi)
        return phi
    return to_matrix(op, sig, mode, deg0, keys)


def span_Adk_generators(sig: SuperSig, d: int, k: int, mode: str,
                        keys: list[tuple] | None = None) -> Iterable[ExactMatrix]:
    """Matrices of L(e_J) L(T_w) L(e_I^*) on V^{(x)d} (x) H_{d+k}."""
    if d < 1 or not 0 <= k <= d:
        raise ValueError(f"need d >= 1 and 0 <= k <= d, got d={d}, k={k}")
    N = d + k
    keys = module_basis(sig, d, k) if keys is None else keys
    idx = list(iproduct(sig.indices(), repeat=d))
    ann = {I: _annihilation_chain(sig, mode, d, N, keys, I) for I in idx}
    cre = {J: _creation_chain(sig, mode, d, N, keys, J) for J in idx}
    deg0 = [((), w) for w in all_permutations(N)]
    mid = [to_matrix(lambda phi, w=w: hecke_left(HeckeElement._raw({w: ONE}, N, mode), phi),
                     sig, mode, deg0)
           for w in all_permutations(N)]
    for J in idx:
        for T in mid:
            CT = cre[J] @ T
            for I in idx:
                yield CT @ ann[I]


def span_Adk(sig: SuperSig, d: int, k: int, mode: str,
             keys: list[tuple] | None = None) -> tuple[int, list[ExactMatrix]]:
    return span_dimension(span_Adk_generators(sig, d, k, mode, keys))


def group_generator_matrices(sig: SuperSig, d: int, mode: str,
                             keys: list[tuple] | None = None) -> list[ExactMatrix]:
    """rho_d of K_i^{+-1}, E_i, F_i (quantum) or of all E_ij (classical)."""
    keys = module_basis(sig, d, 0) if keys is None else keys
    ops = []
    if mode == "quantum":
        for i in sig.indices():
            ops += [K(i), Kinv(i)]
        for i in range(1, sig.dim):
            ops += [E(i), F(i)]
        return [to_matrix(lambda phi, g=g: act_on_ext(g, phi), sig, mode, keys) for g in ops]
    return [to_matrix(lambda phi, i=i, j=j: act_classical_on_ext(i, j, phi), sig, mode, keys)
            for i in sig.indices() for j in sig.indices()]


@dataclass
class DualityReport:
    mode: str
    m: int
    n: int
    d: int
    k: int
    dim_module: int
    dim_commutant: int
    dim_span_Adk: int
    dim_bicommutant: int
    dim_hecke_image: int
    containment_checked: bool
    dim_group_closure: int | None = None
    closure_contained: bool | None = None
    specialization: dict | None = None
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        ok = (self.dim_commutant == self.dim_span_Adk
              and self.dim_bicommutant == self.dim_hecke_image
              and self.containment_checked)
        if self.dim_group_closure is not None:
            ok = ok and self.dim_group_closure == self.dim_commutant and bool(self.closure_contained)
        if self.specialization is not None:
            ok = ok and self.specialization.get("consistent", False)
        return ok

    def dims(self) -> dict:
        return {"module": self.dim_module, "commutant": self.dim_commutant,
                "span_Adk": self.dim_span_Adk, "bicommutant": self.dim_bicommutant,
                "hecke_image": self.dim_hecke_image}


def check_specialization_point(a: Fraction, top: int) -> None:
    """Reject values where q is singular or some [j], j <= top, vanishes."""
    a = Fraction(a)
    if a == 0:
        raise ValueError("cannot specialize q at 0")
    if a * a == 1:
        raise ValueError(f"q - q^-1 vanishes at q = {a}")
    for j in range(1, top + 1):
        if _spec_value(q_int(j), a) == 0:
            raise ValueError(f"[{j}] vanishes at q = {a}")


def _dims_for(hecke_gens, hecke_span, span_basis, group_gens, s):
    dim_comm, _ = commutant(hecke_gens, s)
    dim_span = len(span_basis)
    dim_bi, _ = commutant(span_basis, s)
    out = {"commutant": dim_comm, "span_Adk": dim_span, "bicommutant": dim_bi,
           "hecke_image": len(hecke_span)}
    if group_gens is not None:
        out["group_closure"] = algebra_closure(group_gens, s)[0]
    return out


def verify_duality(m: int, n: int, d: int, k: int, mode: str = "quantum",
                   dim_cap: int = DEFAULT_DIM_CAP,
                   specialize_at: Fraction | None = None) -> DualityReport:
    """Commutant of the Hecke action versus the creation/annihilation span."""
    if mode not in ("quantum", "classical"):
        raise ValueError(f"unknown mode {mode!r}")
    if d < 1 or not 0 <= k <= d:
        raise ValueError(f"need d >= 1 and 0 <= k <= d, got d={d}, k={k}")
    sig = SuperSig(m, n)
    keys = module_basis(sig, d, k)
    s = len(keys)
    if s > dim_cap:
        raise ResourceCapError(f"module dimension {s} exceeds cap {dim_cap}")
    if specialize_at is not None:
        if mode != "quantum":
            raise ValueError("specialization only applies to the quantum mode")
        check_specialization_point(specialize_at, d + k)

    gens = hecke_generator_matrices(sig, d, k, mode, keys)
    dim_img, img_basis = hecke_image(sig, d, k, mode, keys)
    dim_span, span_basis = span_Adk(sig, d, k, mode, keys)
    dim_comm, _ = commutant(gens, s)
    contained = all(M.commutes_with(G) for M in span_basis for G in gens)
    dim_bi, _ = commutant(span_basis, s)

    group = None
    dim_closure = closure_ok = None
    if k == 0:
        group = group_generator_matrices(sig, d, mode, keys)
        dim_closure, _ = algebra_closure(group, s)
        closure_ok = all(X.commutes_with(G) for X in group for G in gens)

    report = DualityReport(mode, m, n, d, k, s, dim_comm, dim_span, dim_bi, dim_img,
                           contained, dim_closure, closure_ok)

    if specialize_at is not None:
        a = Fraction(specialize_at)
        sp = lambda ms: [M.specialize(a) for M in ms]
        from .extension import right_act
        N = d + k
        s_gens = sp(gens)
        s_img = span_dimension(
            to_matrix(lambda phi, w=w: right_act(phi, HeckeElement._raw({w: ONE}, N, mode)),
                      sig, mode, keys).specialize(a)
            for w in all_permutations(N))[1]
        s_span = span_dimension(M.specialize(a)
                                for M in span_Adk_generators(sig, d, k, mode, keys))[1]
        spec = _dims_for(s_gens, s_img, s_span, sp(group) if group is not None else None, s)
        generic = {"commutant": dim_comm, "span_Adk": dim_span, "bicommutant": dim_bi,
                   "hecke_image": dim_img}
        if group is not None:
            generic["group_closure"] = dim_closure
        report.specialization = {"q": str(a), "dims": spec,
                                 "consistent": spec == generic}
    return report
