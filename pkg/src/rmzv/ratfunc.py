"""Univariate polynomials and rational functions over Q in the deformation
parameter ``d`` (the delta of the direction path ``|s| + d``)."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Tuple

__all__ = [
    "Poly",
    "RatFunc",
    "PoleAtZero",
    "ratfunc_arith",
    "eval_at_delta_zero",
    "DeltaSeries",
    "expand_at_zero",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class PoleAtZero(ZeroDivisionError):
    """The reduced denominator vanishes at d = 0."""


def _trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _mul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        x = a[0]
        return tuple(x * y for y in b)
    if len(b) == 1:
        y = b[0]
        return tuple(x * y for x in a)
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return _trim(out)


def _divmod(a, b):
    """Quotient and remainder by a nonzero b."""
    if len(a) < len(b):
        return (), a
    rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    q = [_ZERO] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if c:
            c = c / lead
            q[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] -= c * b[j]
    return _trim(q), _trim(rem[:db])


def _monic(a):
    lead = a[-1]
    if lead == 1:
        return a
    return tuple(x / lead for x in a)


def _gcd(a, b):
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return (_ONE,)
        a, b = b, _divmod(a, b)[1]
    return _monic(a) if a else a


def _exact_div(a, b):
    if b == (_ONE,):
        return a
    q, r = _divmod(a, b)
    assert not r, "inexact polynomial division"
    return q


class Poly:
    """Polynomial in ``d`` with Fraction coefficients, lowest degree first."""

    __slots__ = ("c",)

    def __init__(self, coefficients: Iterable = ()):
        self.c = _trim(tuple(Fraction(x) for x in coefficients))

    @classmethod
    def _raw(cls, c) -> "Poly":
        p = object.__new__(cls)
        p.c = c
        return p

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def __call__(self, x):
        acc = _ZERO
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def __add__(self, other):
        return Poly._raw(_add(self.c, _poly(other).c))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(-x for x in self.c))

    def __sub__(self, other):
        return self + (-_poly(other))

    def __mul__(self, other):
        return Poly._raw(_mul(self.c, _poly(other).c))

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = _poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q, r = _divmod(self.c, other.c)
        return Poly._raw(q), Poly._raw(r)

    def gcd(self, other) -> "Poly":
        return Poly._raw(_gcd(self.c, _poly(other).c))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.c == other.c
        if isinstance(other, (int, Rational)):
            return self.c == _trim((Fraction(other),))
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return "Poly(%s)" % _poly_str(self.c)

    def __str__(self):
        return _poly_str(self.c)


def _poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly((x,))


def _coeff_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


def _poly_str(c, var="d") -> str:
    if not c:
        return "0"
    parts = []
    for i in range(len(c) - 1, -1, -1):
        a = c[i]
        if not a:
            continue
        mag = abs(a)
        if i == 0:
            body = _coeff_str(mag)
        else:
            mono = var if i == 1 else "%s^%d" % (var, i)
            body = mono if mag == 1 else "%s*%s" % (_coeff_str(mag), mono)
        if not parts:
            parts.append(("-" if a < 0 else "") + body)
        else:
            parts.append(("- " if a < 0 else "+ ") + body)
    return " ".join(parts)


class RatFunc:
    """Element of Q(d) in canonical form: reduced, monic denominator.

    >>> d = RatFunc.delta()
    >>> print(d + 1 / d)
    (d^2 + 1)/(d)
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        n = _poly(num).c
        m = _poly(den).c
        if not m:
            raise ZeroDivisionError("RatFunc with zero denominator")
        if not n:
            self.num, self.den = (), (_ONE,)
        else:
            g = _gcd(n, m)
            n, m = _exact_div(n, g), _exact_div(m, g)
            lead = m[-1]
            if lead != 1:
                n = tuple(x / lead for x in n)
                m = tuple(x / lead for x in m)
            self.num, self.den = n, m
        self._hash = None

    @classmethod
    def _canon(cls, n, m) -> "RatFunc":
        """Wrap an already canonical pair."""
        r = object.__new__(cls)
        r.num, r.den, r._hash = n, m, None
        return r

    @classmethod
    def const(cls, q) -> "RatFunc":
        q = Fraction(q)
        return cls._canon((q,) if q else (), (_ONE,))

    @classmethod
    def delta(cls) -> "RatFunc":
        return cls._canon((_ZERO, _ONE), (_ONE,))

    @classmethod
    def affine(cls, c, m) -> "RatFunc":
        """c + m*d."""
        return cls._canon(_trim((Fraction(c), Fraction(m))), (_ONE,))

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def zero(self) -> "RatFunc":
        return _RF_ZERO

    def is_polynomial(self) -> bool:
        return len(self.den) == 1

    def is_constant(self) -> bool:
        return len(self.den) == 1 and len(self.num) <= 1

    @property
    def numerator(self) -> Poly:
        return Poly._raw(self.num)

    @property
    def denominator(self) -> Poly:
        return Poly._raw(self.den)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("%s is not constant" % self)
        return self.num[0] if self.num else _ZERO

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _rf(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.num, self.den, o.num, o.den
        if not a:
            return o
        if not c:
            return self
        if len(b) == 1 and len(d) == 1:
            return RatFunc._canon(_add(a, c), b)
        if b == d:
            n = _add(a, c)
            if not n:
                return RatFunc._canon((), (_ONE,))
            g = _gcd(n, b)
            return RatFunc._canon(_exact_div(n, g), _exact_div(b, g))
        g = _gcd(b, d)
        if len(g) == 1:
            return RatFunc._canon(_add(_mul(a, d), _mul(c, b)), _mul(b, d))
        b1, d1 = _exact_div(b, g), _exact_div(d, g)
        n = _add(_mul(a, d1), _mul(c, b1))
        if not n:
            return RatFunc._canon((), (_ONE,))
        den = _mul(b1, d)
        g2 = _gcd(n, g)
        return RatFunc._canon(_exact_div(n, g2), _exact_div(den, g2))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._canon(tuple(-x for x in self.num), self.den)

    def __sub__(self, other):
        o = _rf(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatFunc._canon((), (_ONE,))
            return RatFunc._canon(tuple(x * other for x in self.num), self.den)
        o = _rf(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.num, self.den, o.num, o.den
        if not a or not c:
            return RatFunc._canon((), (_ONE,))
        if len(b) > 1 and len(c) > 1:
            g = _gcd(c, b)
            c, b = _exact_div(c, g), _exact_div(b, g)
        if len(d) > 1 and len(a) > 1:
            g = _gcd(a, d)
            a, d = _exact_div(a, g), _exact_div(d, g)
        return RatFunc._canon(_mul(a, c), _mul(b, d))

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of the zero RatFunc")
        lead = self.num[-1]
        return RatFunc._canon(tuple(x / lead for x in self.den), tuple(x / lead for x in self.num))

    def __truediv__(self, other):
        o = _rf(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return _rf(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = RatFunc.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- evaluation ---------------------------------------------------------

    def __call__(self, x) -> Fraction:
        den = Poly._raw(self.den)(x)
        if not den:
            raise ZeroDivisionError("denominator vanishes at %s" % x)
        return Poly._raw(self.num)(x) / den

    def at_zero(self) -> Fraction:
        if not self.den[0]:
            raise PoleAtZero("%s has a pole at d = 0" % self)
        if not self.num:
            return _ZERO
        return self.num[0] / self.den[0]

    # -- comparison / display -----------------------------------------------

    def __eq__(self, other):
        o = _rf(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return "RatFunc(%s)" % self

    def __str__(self):
        if len(self.den) == 1:
            return _poly_str(self.num)
        return "(%s)/(%s)" % (_poly_str(self.num), _poly_str(self.den))

    def key(self) -> Tuple:
        return (self.num, self.den)


_RF_ZERO = RatFunc._canon((), (_ONE,))


def _rf(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFunc.const(x)
    if isinstance(x, Poly):
        return RatFunc._canon(x.c, (_ONE,))
    if isinstance(x, Rational):
        return RatFunc.const(Fraction(x))
    return NotImplemented


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def ratfunc_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    """Field operation ``op`` in {add, sub, mul, div}; result canonical."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError("unknown operation %r" % op) from None
    return fn(_rf(a), _rf(b))


def eval_at_delta_zero(f: RatFunc) -> Fraction:
    """Value of the canonical form at d = 0; raises PoleAtZero on a pole."""
    return _rf(f).at_zero()


# ---------------------------------------------------------------------------
# Truncated Laurent series in d.
#
# Along the deformation path every denominator is a product of affine forms
# c + m*d.  Forms with c > 0 are units of Q[[d]], and a form with c = 0 is a
# monomial, so each element has a Laurent expansion at d = 0.  Arithmetic on
# such expansions needs no polynomial gcds, which is what makes it the fast
# route to values at d = 0.


try:  # gmpy2 rationals are an order of magnitude faster than Fraction
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

_QZERO = _Q(0)


class DeltaSeries:
    """Laurent series in ``d`` known exactly through ``d^hi`` (``hi=None``:
    exact).  ``lo`` is the true valuation whenever any coefficient is
    nonzero; entries past the stored tuple are zero up to ``hi``.
    """

    __slots__ = ("lo", "c", "hi")

    def __init__(self, lo: int, coeffs: Iterable = (), hi=None):
        c = [_Q(x) for x in coeffs]
        self.lo, self.c, self.hi = _ds_norm(lo, c, hi)

    @classmethod
    def _raw(cls, lo, c, hi) -> "DeltaSeries":
        s = object.__new__(cls)
        s.lo, s.c, s.hi = lo, c, hi
        return s

    @classmethod
    def const(cls, q) -> "DeltaSeries":
        q = _Q(q)
        return cls._raw(0, (q,) if q else (), None)

    @classmethod
    def affine(cls, c, m) -> "DeltaSeries":
        return cls(0, (c, m))

    @classmethod
    def affine_power(cls, c, m, n: int, hi: int) -> "DeltaSeries":
        """(c + m*d)^n for any integer n, through d^hi when inexact."""
        c, m = _Q(c), _Q(m)
        if n >= 0:
            out = cls.const(1)
            base = cls.affine(c, m)
            for _ in range(n):
                out = out * base
            return out
        if not c:
            return cls._raw(n, (m**n,), None)
        # c^n (1 + (m/c) d)^n with a generalized binomial series
        t = m / c
        lead = c**n
        coeffs = [lead]
        b = lead
        for i in range(1, hi + 1):
            b = b * (n - i + 1) / i * t
            coeffs.append(b)
        if not t:
            return cls._raw(0, (lead,), None)
        return cls(0, coeffs, hi)

    def zero(self) -> "DeltaSeries":
        return _DS_ZERO

    def __bool__(self):
        return bool(self.c) or self.hi is not None

    def is_zero(self) -> bool:
        """Exactly zero (not merely zero through the known order)."""
        return not self.c and self.hi is None

    def is_constant(self) -> bool:
        return self.hi is None and (not self.c or (self.lo == 0 and len(self.c) == 1))

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("%s is not constant" % self)
        return Fraction(self.c[0]) if self.c else _ZERO

    def __getitem__(self, k: int) -> Fraction:
        if k < self.lo:
            return _ZERO
        i = k - self.lo
        if i < len(self.c):
            return Fraction(self.c[i])
        if self.hi is not None and k > self.hi:
            raise ArithmeticError("d^%d lies beyond the known order d^%d" % (k, self.hi))
        return _ZERO

    def __add__(self, other):
        o = _ds(other)
        if o is NotImplemented:
            return o
        if not o.c and o.hi is None:
            return self
        if not self.c and self.hi is None:
            return o
        hi = _min_hi(self.hi, o.hi)
        lo = min(self.lo, o.lo)
        end = max(self.lo + len(self.c), o.lo + len(o.c))
        if hi is not None:
            end = min(end, hi + 1)
        if end <= lo:
            return DeltaSeries._raw(*_ds_norm(lo, [], hi))
        out = [_QZERO] * (end - lo)
        for s in (self, o):
            off = s.lo - lo
            for i, x in enumerate(s.c):
                if off + i >= len(out):
                    break
                out[off + i] += x
        return DeltaSeries._raw(*_ds_norm(lo, out, hi))

    __radd__ = __add__

    def __neg__(self):
        return DeltaSeries._raw(self.lo, tuple(-x for x in self.c), self.hi)

    def __sub__(self, other):
        o = _ds(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return _DS_ZERO
            other = _Q(other)
            return DeltaSeries._raw(self.lo, tuple(x * other for x in self.c), self.hi)
        o = _ds(other)
        if o is NotImplemented:
            return o
        if (not self.c and self.hi is None) or (not o.c and o.hi is None):
            return _DS_ZERO
        lo = self.lo + o.lo
        hi = _min_hi(
            None if o.hi is None else self.lo + o.hi,
            None if self.hi is None else o.lo + self.hi,
        )
        n = len(self.c) + len(o.c) - 1
        if hi is not None:
            n = min(n, hi - lo + 1)
        if n <= 0:
            return DeltaSeries._raw(*_ds_norm(lo, [], hi))
        a, b = self.c, o.c
        if len(a) == 1 and len(b) == 1:
            return DeltaSeries._raw(lo, (a[0] * b[0],), hi)
        out = [_QZERO] * n
        for i, x in enumerate(a[:n]):
            for j, y in enumerate(b[: n - i]):
                out[i + j] += x * y
        return DeltaSeries._raw(*_ds_norm(lo, out, hi))

    __rmul__ = __mul__

    def __truediv__(self, k):
        if isinstance(k, (int, Fraction)):
            return self * (_Q(1) / _Q(k))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("DeltaSeries supports non-negative powers only")
        out = DeltaSeries.const(1)
        for _ in range(n):
            out = out * self
        return out

    def at_zero(self) -> Fraction:
        """Value at d = 0; PoleAtZero if a negative power survives."""
        if self.c and self.lo < 0:
            raise PoleAtZero("%s has a pole at d = 0" % self)
        if self.hi is not None and self.hi < 0:
            raise ArithmeticError("series known only through d^%d" % self.hi)
        return self[0]

    def __eq__(self, other):
        o = _ds(other)
        if o is NotImplemented:
            return NotImplemented
        return self.lo == o.lo and self.c == o.c and self.hi == o.hi

    def __hash__(self):
        return hash((self.lo, self.c, self.hi))

    def agrees_with(self, f: "RatFunc") -> bool:
        """True if this is the expansion of ``f`` wherever it is known."""
        top = self.hi if self.hi is not None else self.lo + len(self.c) + 8
        ref = expand_at_zero(f, top)
        return all(self[k] == ref[k] for k in range(min(self.lo, ref.lo), top + 1))

    def __repr__(self):
        return "DeltaSeries(%s)" % self

    def __str__(self):
        terms = []
        for i, x in enumerate(self.c):
            if not x:
                continue
            k = self.lo + i
            mag = _coeff_str(Fraction(abs(x)))
            mono = "" if k == 0 else ("d" if k == 1 else "d^%d" % k)
            body = mag if not mono else (mono if abs(x) == 1 else "%s*%s" % (mag, mono))
            if not terms:
                terms.append(("-" if x < 0 else "") + body)
            else:
                terms.append(("- " if x < 0 else "+ ") + body)
        if self.hi is not None:
            terms.append("+ O(d^%d)" % (self.hi + 1) if terms else "O(d^%d)" % (self.hi + 1))
        return " ".join(terms) if terms else "0"


def _min_hi(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a if a < b else b


def _ds_norm(lo, c, hi):
    n = len(c)
    if hi is not None:
        n = min(n, hi - lo + 1)
    while n and not c[n - 1]:
        n -= 1
    i = 0
    while i < n and not c[i]:
        i += 1
    if i == n:
        return (0, (), None) if hi is None else (hi + 1, (), hi)
    return lo + i, tuple(c[i:n]), hi


def _ds(x):
    if isinstance(x, DeltaSeries):
        return x
    if isinstance(x, (int, Fraction)):
        return DeltaSeries.const(x)
    return NotImplemented


_DS_ZERO = DeltaSeries._raw(0, (), None)


def expand_at_zero(f: RatFunc, hi: int) -> DeltaSeries:
    """Laurent expansion of ``f`` at d = 0 through d^hi."""
    f = _rf(f)
    if not f.num:
        return _DS_ZERO
    den = f.den
    v = 0
    while not den[v]:
        v += 1
    den = den[v:]
    # power series of num/den by long division from the low end
    n = hi + v + 1
    if n <= 0:
        return DeltaSeries(hi + 1, (), hi)
    num = list(f.num) + [_ZERO] * max(0, n - len(f.num))
    d0 = den[0]
    out = []
    for k in range(n):
        x = num[k]
        for j in range(1, min(k, len(den) - 1) + 1):
            x -= den[j] * out[k - j]
        out.append(x / d0)
    exact = len(den) == 1
    return DeltaSeries(-v, out, None if exact and len(f.num) <= n else hi)
