"""Laurent expansions of the directional regularized MZV Z(s|r; e) for words
with all exponents <= 0.

Depth one is closed form in Bernoulli numbers.  Longer words are reduced by
peeling off the leftmost letter:

    Z(s|r) = sum_{j=0}^{-s1} C(-s1, j) Z(-j|r1) Z(s1+s2+j, s3, ...|r1+r2, r3, ...)

so every value is a polynomial in depth-one series.  Windows are demand
driven: a call asks for coefficients through ``e^hi`` and each factor is
built just long enough for the product to be exact there.
"""

from __future__ import annotations

import math
import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .exact import zeta_nonpositive
from .hopf import Direction, Letter, Word, quasi_shuffle
from .laurent import LaurentSeries, series_add, series_mul
from .ratfunc import DeltaSeries, RatFunc

__all__ = [
    "RATFUNC",
    "RatFuncRing",
    "DeltaRing",
    "window_margin",
    "pole_bound",
    "default_window",
    "z_depth1",
    "z_nonpos",
    "z_quasi_shuffle_check",
    "clear_caches",
]

_CACHE_LOCK = threading.Lock()
_DEPTH1: dict = {}
_NONPOS: dict = {}


@dataclass(frozen=True)
class RatFuncRing:
    """Coefficients in Q(d) as canonical rational functions."""

    def power(self, dir: Direction, n: int) -> RatFunc:
        return dir.ratfunc ** n

    def const(self, q) -> RatFunc:
        return RatFunc.const(q)


@dataclass(frozen=True)
class DeltaRing:
    """Coefficients as Laurent expansions at d = 0, exact through d^precision.

    Only letters with c = 0 produce poles in d, each a simple pole, so
    ``precision`` equal to the number of such letters in the top-level word
    keeps every d^0 coefficient exact.
    """

    precision: int

    def power(self, dir: Direction, n: int) -> DeltaSeries:
        return DeltaSeries.affine_power(dir.c, dir.m, n, self.precision)

    def const(self, q) -> DeltaSeries:
        return DeltaSeries.const(q)


RATFUNC = RatFuncRing()


def window_margin() -> int:
    """Extra e-orders requested on top of the default policy (env MZV_WINDOW_MARGIN)."""
    raw = os.environ.get("MZV_WINDOW_MARGIN", "0").strip() or "0"
    value = int(raw)
    if value < 0:
        raise ValueError("MZV_WINDOW_MARGIN must be >= 0")
    return value


def pole_bound(word: Word) -> int:
    """w + k: no e^j with j < -(w + k) occurs in Z(word)."""
    return word.weight + word.depth


def default_window(word: Word) -> Tuple[int, int]:
    b = pole_bound(word)
    return (-b, b + window_margin())


def _check_nonpos(word: Word) -> None:
    for a in word:
        if a.s > 0:
            raise ValueError("expected exponents <= 0, got %s" % (word,))


def _hi_of(window) -> Optional[int]:
    if window is None or isinstance(window, int):
        return window
    return window[1]


def clear_caches() -> None:
    with _CACHE_LOCK:
        _DEPTH1.clear()
        _NONPOS.clear()


def _z_depth1(s: int, dir: Direction, hi: int, ring) -> LaurentSeries:
    lo = s - 1
    zero = ring.const(0)
    coeffs = [zero] * (hi - lo + 1)
    # (-1)^(s-1) (-s)! (r e)^(s-1)
    lead = Fraction((-1) ** (1 - s) * math.factorial(-s))
    coeffs[0] = ring.power(dir, s - 1) * lead
    r = ring.power(dir, 1)
    power = ring.const(1)
    fact = 1
    for j in range(hi + 1):
        if j:
            power = power * r
            fact *= j
        z = zeta_nonpositive(s - j)
        if z:
            coeffs[j - lo] = power * (z / fact)
    return LaurentSeries._raw(lo, tuple(coeffs))


def z_depth1(s: int, dir, window=None, ring=RATFUNC) -> LaurentSeries:
    """Z(s|r; e) for s <= 0, known on [s - 1, hi].

    >>> print(z_depth1(0, 1, (-1, 2)))
    -1*e^-1 - 1/2 - 1/12*e
    """
    if s > 0:
        raise ValueError("z_depth1 needs s <= 0, got %d" % s)
    dir = Direction.coerce(dir)
    hi = _hi_of(window)
    if hi is None:
        hi = -s + 1 + window_margin()
    if hi < s - 1:
        hi = s - 1
    key = (s, dir, hi, ring)
    out = _DEPTH1.get(key)
    if out is None:
        out = _z_depth1(s, dir, hi, ring)
        with _CACHE_LOCK:
            _DEPTH1[key] = out
    return out


def _reduced(word: Word, j: int) -> Word:
    a, b = word[0], word[1]
    return Word((Letter(a.s + b.s + j, a.dir + b.dir),) + tuple(word[2:]))


def z_nonpos(word: Word, window=None, ring=RATFUNC) -> LaurentSeries:
    """Z(word; e) for a non-positive word, laid out on [-(w + k), hi].

    ``window`` is ``(lo, hi)`` or just ``hi``; the default is the policy
    ``[-(w + k), w + k + MZV_WINDOW_MARGIN]``.
    """
    word = Word(word)
    _check_nonpos(word)
    hi = _hi_of(window)
    if hi is None:
        hi = default_window(word)[1]
    if not word:
        return LaurentSeries.scalar(ring.const(1), 0, max(hi, 0))
    lo = -pole_bound(word)
    if hi < lo:
        hi = lo
    key = (word, hi, ring)
    out = _NONPOS.get(key)
    if out is not None:
        return out
    if len(word) == 1:
        out = z_depth1(word[0].s, word[0].dir, hi, ring)
    else:
        s1 = word[0].s
        r1 = word[0].dir
        out = None
        for j in range(-s1 + 1):
            rest = _reduced(word, j)
            rest_lo = -pole_bound(rest)
            f1 = z_depth1(-j, r1, hi - rest_lo, ring)
            f2 = z_nonpos(rest, hi + j + 1, ring)
            term = series_mul(f1, f2)
            c = math.comb(-s1, j)
            if c != 1:
                term = term * c
            out = term if out is None else series_add(out, term)
    with _CACHE_LOCK:
        _NONPOS[key] = out
    return out


def z_quasi_shuffle_check(a: Word, b: Word, window=None, ring=RATFUNC) -> bool:
    """Z(a) Z(b) == sum of Z over a ⧢ b, exactly on the common window."""
    a, b = Word(a), Word(b)
    if not a or not b:
        return True
    if len(a) + len(b) > 5:
        raise ValueError("z_quasi_shuffle_check is bounded to combined depth 5")
    hi = _hi_of(window)
    if hi is None:
        hi = default_window(a + b)[1]
    lhs = series_mul(z_nonpos(a, hi + pole_bound(b), ring), z_nonpos(b, hi + pole_bound(a), ring))
    rhs = None
    for w, c in quasi_shuffle(a, b):
        term = z_nonpos(w, hi, ring) * c
        rhs = term if rhs is None else series_add(rhs, term)
    return lhs.agrees_with(rhs)
