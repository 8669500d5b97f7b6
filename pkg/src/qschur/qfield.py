"""Exact arithmetic in the rational function field Q(q).

Two polynomial flavours live here.  ``Poly`` is the public polynomial over
Q with ``Fraction`` coefficients.  ``RatFunc`` stores its numerator and
denominator as integer coefficient tuples (ascending degree) in a canonical
form: coprime, jointly primitive, denominator with positive leading
coefficient.  The monic-denominator view is exposed through ``num``/``den``.

Negative powers of q are ordinary rational functions with a power of q in the
denominator, and denominators that are monomials take a fast path that never
calls the polynomial gcd.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Union

__all__ = [
    "Poly", "RatFunc", "normalize", "q_int", "q_factorial", "specialize",
    "Q", "QINV", "ONE", "ZERO", "q_pow", "as_ratfunc",
]

IntPoly = tuple  # tuple[int, ...], ascending degree, no trailing zeros


# --------------------------------------------------------------------------
# integer polynomial helpers

def _trim(c: list) -> tuple:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _padd(a: IntPoly, b: IntPoly) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _psub(a: IntPoly, b: IntPoly) -> IntPoly:
    out = list(a) + [0] * (len(b) - len(a))
    for i, x in enumerate(b):
        out[i] -= x
    return _trim(out)


def _pmul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ()
    if len(a) == 1:
        c = a[0]
        return tuple(c * x for x in b)
    if len(b) == 1:
        c = b[0]
        return tuple(c * x for x in a)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _content(a: IntPoly) -> int:
    return reduce(gcd, a, 0)


def _divint(a: IntPoly, c: int) -> IntPoly:
    return tuple(x // c for x in a)


def _order(a: IntPoly) -> int:
    for i, x in enumerate(a):
        if x:
            return i
    raise ValueError("order of zero polynomial")


def _is_monomial(a: IntPoly) -> bool:
    return not any(a[:-1])


def _prem(a: IntPoly, b: IntPoly) -> IntPoly:
    # pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for i, y in enumerate(b):
            r[i + shift] -= lr * y
        r = list(_trim(r))
    return tuple(r)


def _primitive(a: IntPoly) -> IntPoly:
    c = _content(a)
    if a[-1] < 0:
        c = -c
    return _divint(a, c) if c != 1 else a


def _pgcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    if not a:
        return _primitive(b) if b else (1,)
    if not b:
        return _primitive(a)
    if _is_monomial(a) or _is_monomial(b):
        k = min(_order(a), _order(b))
        return (0,) * k + (1,)
    k = min(_order(a), _order(b))
    a = _primitive(a[k:] if k else a)
    b = _primitive(b[k:] if k else b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return (0,) * k + (1,)
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else r)
    return (0,) * k + _primitive(a)


def _pdivexact(a: IntPoly, b: IntPoly) -> IntPoly:
    # exact quotient a / b, b divides a over Z[q]
    if len(b) == 1:
        return _divint(a, b[0]) if b[0] != 1 else a
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    out = [0] * (len(a) - db)
    for s in range(len(a) - 1 - db, -1, -1):
        c = r[s + db]
        if c:
            qc, rem = divmod(c, lb)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            out[s] = qc
            for i, y in enumerate(b):
                r[s + i] -= qc * y
    if any(r[:db]):
        raise ArithmeticError("inexact polynomial division")
    return tuple(out)


def _peval(a: IntPoly, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _canon(n: IntPoly, d: IntPoly) -> "RatFunc":
    if not d:
        raise ZeroDivisionError("division by zero polynomial")
    if not n:
        return ZERO
    if _is_monomial(d):
        k = len(d) - 1
        c = d[-1]
        s = min(k, _order(n))
        if s:
            n = n[s:]
            k -= s
        g = gcd(_content(n), c)
        if c < 0:
            g = -g
        if g != 1:
            n = _divint(n, g)
            c //= g
        d = (0,) * k + (c,)
    else:
        g = _pgcd(n, d)
        if len(g) > 1:
            n = _pdivexact(n, g)
            d = _pdivexact(d, g)
        c = gcd(_content(n), _content(d))
        if d[-1] < 0:
            c = -c
        if c != 1:
            n = _divint(n, c)
            d = _divint(d, c)
    return RatFunc._raw(n, d)


# --------------------------------------------------------------------------
# public polynomial type over Q

class Poly:
    """Polynomial in q with rational coefficients, immutable.

    ``Poly([1, 0, 2])`` is ``1 + 2q^2``.  Trailing zeros are stripped, so the
    zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable = ()):
        c = [Fraction(x) for x in coefficients]
        object.__setattr__(self, "coefficients", _trim(c))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def q(cls) -> "Poly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __bool__(self):
        return bool(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        return isinstance(other, Poly) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-x for x in self.coefficients)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Poly([1])
        for _ in range(e):
            out = out * self
        return out

    def __divmod__(self, other):
        other = _as_poly(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        r = list(self.coefficients)
        b = other.coefficients
        db = len(b) - 1
        out = [Fraction(0)] * max(len(r) - db, 0)
        while len(r) - 1 >= db and r:
            c = r[-1] / b[-1]
            s = len(r) - 1 - db
            out[s] = c
            for i, y in enumerate(b):
                r[i + s] -= c * y
            r = list(_trim(r))
        return Poly(out), Poly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if not self:
            return self
        lc = self.coefficients[-1]
        return Poly(x / lc for x in self.coefficients)

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd (zero if both are zero)."""
        a, b = self, _as_poly(other)
        while b:
            a, b = b, a % b
        return a.monic()

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def _integer_form(self) -> tuple[IntPoly, int]:
        # (integer coefficients, positive scale) with self == ints / scale
        den = reduce(lambda a, b: a * b // gcd(a, b),
                     (c.denominator for c in self.coefficients), 1)
        return tuple(int(c * den) for c in self.coefficients), den

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coefficients]})"

    def __str__(self):
        return _render(self.coefficients)


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly([x])
    return NotImplemented


def _render_coeff(c, k: int) -> str:
    mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def _render(coeffs) -> str:
    parts = [_render_coeff(c, k) for k, c in enumerate(coeffs) if c]
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


# --------------------------------------------------------------------------
# rational functions

class RatFunc:
    """Element of Q(q) in canonical form.

    Build from ints, Fractions or via ``normalize``; ``Q`` is the
    indeterminate.  Arithmetic mixes freely with ``int`` and ``Fraction``.
    """

    __slots__ = ("_n", "_d", "_h")

    def __init__(self, value: Union[int, Fraction] = 0):
        v = Fraction(value)
        r = _canon((v.numerator,) if v else (), (v.denominator,))
        self._n, self._d, self._h = r._n, r._d, None

    @classmethod
    def _raw(cls, n: IntPoly, d: IntPoly) -> "RatFunc":
        obj = object.__new__(cls)
        obj._n = n
        obj._d = d
        obj._h = None
        return obj

    # public monic-denominator view
    @property
    def num(self) -> Poly:
        lc = self._d[-1]
        return Poly(Fraction(x, lc) for x in self._n)

    @property
    def den(self) -> Poly:
        lc = self._d[-1]
        return Poly(Fraction(x, lc) for x in self._d)

    def is_zero(self) -> bool:
        return not self._n

    def __bool__(self):
        return bool(self._n)

    def is_constant(self) -> bool:
        return len(self._n) <= 1 and len(self._d) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return Fraction(self._n[0], self._d[0]) if self._n else Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            other = as_ratfunc(other)
            if other is NotImplemented:
                return NotImplemented
        return self._n == other._n and self._d == other._d

    def __hash__(self):
        if self._h is None:
            self._h = hash((self._n, self._d))
        return self._h

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            other = as_ratfunc(other)
            if other is NotImplemented:
                return NotImplemented
        if not self._n:
            return other
        if not other._n:
            return self
        if self._d == other._d:
            return _canon(_padd(self._n, other._n), self._d)
        return _canon(_padd(_pmul(self._n, other._d), _pmul(other._n, self._d)),
                      _pmul(self._d, other._d))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(tuple(-x for x in self._n), self._d)

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            other = as_ratfunc(other)
            if other is NotImplemented:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return as_ratfunc(other) - self

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            other = as_ratfunc(other)
            if other is NotImplemented:
                return NotImplemented
        if not self._n or not other._n:
            return ZERO
        if self._d == (1,) and self._n == (1,):
            return other
        if other._d == (1,) and other._n == (1,):
            return self
        return _canon(_pmul(self._n, other._n), _pmul(self._d, other._d))

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self._n:
            raise ZeroDivisionError("division by zero polynomial")
        if self._n[-1] < 0:
            return RatFunc._raw(tuple(-x for x in self._d), tuple(-x for x in self._n))
        return RatFunc._raw(self._d, self._n)

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            other = as_ratfunc(other)
            if other is NotImplemented:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_ratfunc(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        n = _render(self._n)
        if self._d == (1,):
            return n
        d = _render(self._d)
        if sum(1 for x in self._n if x) > 1:
            n = f"({n})"
        if sum(1 for x in self._d if x) > 1 or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"


def as_ratfunc(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, bool):
        return NotImplemented
    if isinstance(x, int):
        return RatFunc._raw((x,) if x else (), (1,))
    if isinstance(x, Fraction):
        return _canon((x.numerator,) if x else (), (x.denominator,))
    if isinstance(x, Poly):
        return normalize(x, Poly([1]))
    return NotImplemented


ZERO = RatFunc._raw((), (1,))
ONE = RatFunc._raw((1,), (1,))
Q = RatFunc._raw((0, 1), (1,))
QINV = RatFunc._raw((1,), (0, 1))


def q_pow(k: int) -> RatFunc:
    """q**k for any integer k."""
    if k >= 0:
        return RatFunc._raw((0,) * k + (1,), (1,))
    return RatFunc._raw((1,), (0,) * (-k) + (1,))


def normalize(num: Poly, den: Poly) -> RatFunc:
    """Canonical representative of num/den."""
    num, den = _as_poly(num), _as_poly(den)
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    a, sa = num._integer_form()
    b, sb = den._integer_form()
    # num/den = (a/sa)/(b/sb) = (a*sb)/(b*sa)
    return _canon(tuple(x * sb for x in a), tuple(x * sa for x in b))


def q_int(k: int) -> RatFunc:
    """Quantum integer (q^k - q^-k)/(q - q^-1)."""
    if k < 0:
        raise ValueError("q_int expects k >= 0")
    return (q_pow(k) - q_pow(-k)) / (Q - QINV)


def q_factorial(k: int) -> RatFunc:
    if k < 0:
        raise ValueError("q_factorial expects k >= 0")
    out = ONE
    for j in range(1, k + 1):
        out = out * q_int(j)
    return out


def specialize(f: RatFunc, a) -> Fraction:
    """Evaluate f at q = a exactly; raises ValueError at a pole."""
    f = as_ratfunc(f)
    a = Fraction(a)
    dv = _peval(f._d, a)
    if dv == 0:
        raise ValueError("specialization pole")
    return Fraction(_peval(f._n, a)) / dv
