"""Truncated Laurent series in the regulator ``e`` with Q(d) coefficients, and
the minimal-subtraction projector onto pole parts.

Coefficients are RatFunc by default; any exact ring element with ``zero()``,
truthiness for exact zero, ``+`` and ``*`` works (DeltaSeries is the other
one in use).

A series carries a window ``[lo, hi]``: every coefficient below ``lo`` is zero
by construction and nothing is claimed above ``hi``.  Arithmetic keeps the
widest window that is still exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .ratfunc import RatFunc

__all__ = [
    "LaurentSeries",
    "EmptyWindow",
    "OutOfWindow",
    "series_add",
    "series_mul",
    "project_pole",
    "project_power",
    "coeff_at",
]

_Z = RatFunc.const(0)


class EmptyWindow(ValueError):
    """An operation would leave no exactly-known coefficient."""


class OutOfWindow(LookupError):
    """A coefficient outside the known window was requested."""


def _as_rf(x):
    return RatFunc.const(x) if isinstance(x, (int, Fraction)) else x


class LaurentSeries:
    __slots__ = ("lo", "coeffs")

    def __init__(self, lo: int, coeffs: Sequence):
        if not coeffs:
            raise EmptyWindow("series needs at least one coefficient")
        self.lo = int(lo)
        self.coeffs = tuple(_as_rf(c) for c in coeffs)

    @classmethod
    def _raw(cls, lo, coeffs):
        s = object.__new__(cls)
        s.lo = lo
        s.coeffs = coeffs
        return s

    @classmethod
    def zero(cls, lo: int, hi: int, like=_Z) -> "LaurentSeries":
        if lo > hi:
            raise EmptyWindow("window [%d, %d] is empty" % (lo, hi))
        return cls._raw(lo, (like.zero(),) * (hi - lo + 1))

    @classmethod
    def scalar(cls, value, lo: int, hi: int) -> "LaurentSeries":
        """The constant ``value`` laid out on ``[lo, hi]`` (lo <= 0 <= hi)."""
        if not lo <= 0 <= hi:
            raise EmptyWindow("a scalar needs 0 inside [%d, %d]" % (lo, hi))
        value = _as_rf(value)
        c = [value.zero()] * (hi - lo + 1)
        c[-lo] = value
        return cls._raw(lo, tuple(c))

    @classmethod
    def monomial(cls, value, k: int, hi: int) -> "LaurentSeries":
        """``value * e^k`` known through ``e^hi``."""
        if hi < k:
            raise EmptyWindow("monomial e^%d with hi=%d" % (k, hi))
        value = _as_rf(value)
        c = [value.zero()] * (hi - k + 1)
        c[0] = value
        return cls._raw(k, tuple(c))

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    @property
    def window(self):
        return (self.lo, self.hi)

    def __getitem__(self, k: int):
        return coeff_at(self, k)

    def items(self):
        return zip(range(self.lo, self.hi + 1), self.coeffs)

    def valuation(self):
        """Lowest exponent with a nonzero coefficient, or None."""
        for k, c in self.items():
            if c:
                return k
        return None

    def truncate(self, hi: int) -> "LaurentSeries":
        if hi > self.hi:
            raise OutOfWindow("cannot extend e^%d series to e^%d" % (self.hi, hi))
        if hi < self.lo:
            raise EmptyWindow("truncation to hi=%d below lo=%d" % (hi, self.lo))
        return LaurentSeries._raw(self.lo, self.coeffs[: hi - self.lo + 1])

    def map(self, fn) -> "LaurentSeries":
        return LaurentSeries._raw(self.lo, tuple(fn(c) for c in self.coeffs))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries.scalar(other, min(self.lo, 0), self.hi)
        return series_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return self.map(lambda c: -c)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            return series_mul(self, other)
        return self.map(lambda c: c * other)

    __rmul__ = __mul__

    def agrees_with(self, other: "LaurentSeries") -> bool:
        """Equal wherever both are known (zeros below each lo)."""
        lo = min(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        return all(_get(self, k) == _get(other, k) for k in range(lo, hi + 1))

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.lo == other.lo and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.lo, self.coeffs))

    def __repr__(self):
        return "LaurentSeries(%s over [%d, %d])" % (self, self.lo, self.hi)

    def __str__(self):
        return render(self)


def _get(a: LaurentSeries, k: int):
    if k < a.lo:
        return a.coeffs[0].zero()
    return a.coeffs[k - a.lo]


def series_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """Coefficientwise sum on ``[min lo, min hi]``.

    Disjoint windows raise EmptyWindow: one operand would be lost entirely
    past the other's truncation, which always means too short a window.
    """
    if max(a.lo, b.lo) > min(a.hi, b.hi):
        raise EmptyWindow("windows %s and %s do not overlap" % (a.window, b.window))
    lo = min(a.lo, b.lo)
    hi = min(a.hi, b.hi)
    return LaurentSeries._raw(lo, tuple(_get(a, k) + _get(b, k) for k in range(lo, hi + 1)))


def series_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """Cauchy product on ``[lo_a + lo_b, min(lo_a + hi_b, lo_b + hi_a)]``."""
    lo = a.lo + b.lo
    hi = min(a.lo + b.hi, b.lo + a.hi)
    if hi < lo:
        raise EmptyWindow("product window [%d, %d] is empty" % (lo, hi))
    n = hi - lo + 1
    ac = [(i, c) for i, c in enumerate(a.coeffs[:n]) if c]
    bc = [(j, c) for j, c in enumerate(b.coeffs[:n]) if c]
    out = [None] * n
    for i, x in ac:
        for j, y in bc:
            if i + j >= n:
                break
            p = x * y
            out[i + j] = p if out[i + j] is None else out[i + j] + p
    z = a.coeffs[0].zero()
    return LaurentSeries._raw(lo, tuple(z if c is None else c for c in out))


def project_pole(a: LaurentSeries, hi: int = None) -> LaurentSeries:
    """Minimal subtraction P: keep the e^k terms with k <= -1.

    The image has no terms at k >= 0, so once ``a`` is known through e^-1 the
    result may be laid out on any longer window ``[lo, hi]``.
    """
    if hi is None:
        hi = a.hi
    elif hi > a.hi and a.hi < -1:
        raise OutOfWindow("pole part needs the input through e^-1, have e^%d" % a.hi)
    if hi < a.lo:
        raise EmptyWindow("window [%d, %d] is empty" % (a.lo, hi))
    z = a.coeffs[0].zero()
    c = [a.coeffs[k - a.lo] if k < 0 and k <= a.hi else z for k in range(a.lo, hi + 1)]
    return LaurentSeries._raw(a.lo, tuple(c))


def project_power(a: LaurentSeries) -> LaurentSeries:
    """The complementary projector id - P."""
    z = a.coeffs[0].zero()
    c = [z if k < 0 else x for k, x in a.items()]
    return LaurentSeries._raw(a.lo, tuple(c))


def coeff_at(a: LaurentSeries, k: int):
    if not a.lo <= k <= a.hi:
        if k < a.lo:
            return a.coeffs[0].zero()
        raise OutOfWindow("e^%d lies outside the known window [%d, %d]" % (k, a.lo, a.hi))
    return a.coeffs[k - a.lo]


def _term_body(c: RatFunc) -> str:
    s = str(c)
    if c.is_constant():
        return s.lstrip("-")
    return "(%s)" % s


def render(a: LaurentSeries, var: str = "e") -> str:
    """``c*e^k`` terms in increasing order, zero terms dropped."""
    parts = []
    for k, c in a.items():
        if not c:
            continue
        neg = c.is_constant() and c.constant_value() < 0
        body = _term_body(c)
        if k == 0:
            term = body
        else:
            mono = var if k == 1 else "%s^%d" % (var, k)
            term = "%s*%s" % (body, mono)
        if not parts:
            parts.append(("-" if neg else "") + term)
        else:
            parts.append(("- " if neg else "+ ") + term)
    return " ".join(parts) if parts else "0"


def from_coefficients(lo: int, coeffs: Iterable) -> LaurentSeries:
    return LaurentSeries(lo, list(coeffs))
