"""Renormalized MZVs gζ(s).

Non-positive arguments: the e^0 coefficient of phi_+ along the directions
|s_i| + d, evaluated at d = 0.  An exact rational.

Positive arguments: convergent words are their own symbol z(s); words with a
leading block of m ones are solved from the quasi-shuffle relation

    (1_{m-1}, s') ⧢ (1) = m (1_m, s') + (words with fewer leading ones)

starting from gζ(1) = T.  The result is a polynomial in T over convergent
MZV symbols.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

from .birkhoff import zeta_directional
from .exact import Composition, mzv_numeric, zeta_nonpositive
from .hopf import Word, letter, quasi_shuffle_exponents, symmetrization_group
from .ratfunc import eval_at_delta_zero
from .zreg import DeltaRing, window_margin

__all__ = [
    "UnsupportedSignature",
    "BoundExceeded",
    "MZVSymbol",
    "SymbolicValue",
    "gzeta",
    "gzeta_nonpos",
    "gzeta_nonpos_ratfunc",
    "gzeta_symmetrized",
    "z2_closed_form",
    "parity_identity",
    "gzeta_positive",
    "symbolic_mul",
    "numeric_value",
    "MAX_NONPOS_DEPTH",
    "MAX_NONPOS_WEIGHT",
    "MAX_POSITIVE_DEPTH",
]

MAX_NONPOS_DEPTH = 6
MAX_NONPOS_WEIGHT = 16
MAX_POSITIVE_DEPTH = 6


class UnsupportedSignature(ValueError):
    """gζ is defined only when all arguments are <= 0 or all are >= 1."""


class BoundExceeded(ValueError):
    pass


def _signature(s: Sequence[int]) -> str:
    if not s:
        raise UnsupportedSignature("gζ needs at least one argument")
    if all(x <= 0 for x in s):
        return "nonpos"
    if all(x >= 1 for x in s):
        return "positive"
    raise UnsupportedSignature(
        "mixed signs %s: renormalized MZVs are defined only for all-positive "
        "or all-non-positive arguments" % (tuple(s),)
    )


# -- non-positive path -------------------------------------------------------

_NONPOS_CACHE: Dict[Tuple, Fraction] = {}
_LOCK = threading.Lock()


def _delta_ring(s: Sequence[int], extra: int = 0) -> DeltaRing:
    # poles in d come only from the zero letters, one simple pole each
    return DeltaRing(sum(1 for x in s if x == 0) + extra)


def gzeta_nonpos_ratfunc(s: Sequence[int]) -> Fraction:
    """gζ(s) through the canonical rational function in d (slow reference)."""
    s = tuple(int(x) for x in s)
    if _signature(s) != "nonpos":
        raise UnsupportedSignature("gzeta_nonpos needs all arguments <= 0, got %s" % (s,))
    return eval_at_delta_zero(zeta_directional(Word.deformed(s), window_margin()))


def gzeta_nonpos(s: Sequence[int]) -> Fraction:
    """Exact gζ(s) for s_i <= 0 (depth <= 6, weight <= 16 beyond depth one).

    Runs on expansions at d = 0 rather than canonical rational functions;
    gzeta_nonpos_ratfunc is the reference it is tested against.

    >>> gzeta_nonpos((-1, -1))
    Fraction(1, 288)
    """
    s = tuple(int(x) for x in s)
    if _signature(s) != "nonpos":
        raise UnsupportedSignature("gzeta_nonpos needs all arguments <= 0, got %s" % (s,))
    w = sum(-x for x in s)
    # depth one is closed form, so only longer words carry the weight bound
    if len(s) > MAX_NONPOS_DEPTH or (len(s) > 1 and w > MAX_NONPOS_WEIGHT):
        raise BoundExceeded(
            "depth %d / weight %d exceeds %d / %d" % (len(s), w, MAX_NONPOS_DEPTH, MAX_NONPOS_WEIGHT)
        )
    margin = window_margin()
    key = (s, margin)
    out = _NONPOS_CACHE.get(key)
    if out is None:
        out = zeta_directional(Word.deformed(s), margin, _delta_ring(s)).at_zero()
        with _LOCK:
            _NONPOS_CACHE[key] = out
    return out


def gzeta_symmetrized(s: Sequence[int], dirs: Sequence) -> Fraction:
    """Sum of ζ(s | σ(r)) over σ in the zero-cluster group, for concrete r."""
    s = tuple(int(x) for x in s)
    if _signature(s) != "nonpos":
        raise UnsupportedSignature("gzeta_symmetrized needs all arguments <= 0")
    word = Word.of(s, dirs)
    if not all(d.concrete for d in word.directions):
        raise ValueError("gzeta_symmetrized needs concrete directions (m = 0)")
    r = word.directions
    total = Fraction(0)
    for sigma in symmetrization_group(s).permutations():
        w = Word(letter(x, r[sigma[i]]) for i, x in enumerate(s))
        total += zeta_directional(w).constant_value()
    return total


def z2_closed_form(s1: int, s2: int) -> Fraction:
    """Two-argument closed form in values of ζ at non-positive integers."""
    if s1 > 0 or s2 > 0:
        raise ValueError("z2_closed_form needs s1, s2 <= 0")
    if s1 == 0 and s2 == 0:
        raise ValueError("z2_closed_form excludes (0, 0)")
    z = zeta_nonpositive
    if s1 == 0:
        return z(0) * z(s2) - z(s2 - 1)
    n = -s1
    t = s1 + s2
    out = -z(t - 1) / (1 - s1)
    ratio = Fraction(t, s1)
    for j in range(n + 1):
        c = math.comb(n, j)
        out += c * z(-j) * z(t + j)
        sign = -1 if (t - j + 1) % 2 else 1
        out += c * Fraction(sign, -t - j + 1) * ratio ** (t + j - 1) * z(t - 1)
    return out


def parity_identity(s1: int, s2: int) -> Fraction:
    """-ζ(s1 + s2)/2, the value of gζ(s1, s2) when s1 + s2 is negative and odd."""
    t = s1 + s2
    if s1 > 0 or s2 > 0 or t >= 0 or t % 2 == 0:
        raise ValueError("parity_identity needs s1, s2 <= 0 with s1 + s2 negative and odd")
    return -zeta_nonpositive(t) / 2


# -- positive path -----------------------------------------------------------


class MZVSymbol(Composition):
    """The convergent value z(s) as a formal symbol."""

    def __new__(cls, parts):
        self = super().__new__(cls, parts)
        if not self.convergent:
            raise ValueError("MZVSymbol needs a convergent composition, got %s" % (tuple(self),))
        return self

    def __repr__(self):
        return "MZVSymbol(%s)" % ",".join(map(str, self))

    def __str__(self):
        return "z(%s)" % ",".join(map(str, self))


# (T-power, symbol or None for the unit)
_Key = Tuple[int, Optional[MZVSymbol]]


def _key_order(k: _Key):
    p, sym = k
    return (-p, 0 if sym is None else 1, tuple(sym) if sym is not None else ())


class SymbolicValue:
    """Polynomial in T with coefficients in the Q-span of MZV symbols."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Dict, Iterable] = ()):
        acc: Dict[_Key, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (p, sym), c in items:
            if p < 0:
                raise ValueError("negative T-power")
            if sym is not None and not isinstance(sym, MZVSymbol):
                sym = MZVSymbol(sym)
            acc[(p, sym)] = acc.get((p, sym), Fraction(0)) + Fraction(c)
        self._terms = tuple(sorted(((k, c) for k, c in acc.items() if c), key=lambda kc: _key_order(kc[0])))

    @classmethod
    def constant(cls, c) -> "SymbolicValue":
        return cls({(0, None): c})

    @classmethod
    def T(cls, power: int = 1) -> "SymbolicValue":
        return cls({(power, None): 1})

    @classmethod
    def symbol(cls, parts, coeff=1) -> "SymbolicValue":
        return cls({(0, MZVSymbol(parts)): coeff})

    def terms(self):
        return self._terms

    def __iter__(self):
        return iter(self._terms)

    @property
    def degree(self) -> int:
        return max((p for (p, _), _c in self._terms), default=0)

    def __add__(self, other):
        other = _sv(other)
        return SymbolicValue(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self):
        return SymbolicValue((k, -c) for k, c in self._terms)

    def __sub__(self, other):
        return self + (-_sv(other))

    def __rsub__(self, other):
        return _sv(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymbolicValue((k, c * other) for k, c in self._terms)
        return symbolic_mul(self, _sv(other))

    __rmul__ = __mul__

    def __truediv__(self, k):
        return self * (Fraction(1) / Fraction(k))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymbolicValue.constant(other)
        if not isinstance(other, SymbolicValue):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        return "SymbolicValue(%s)" % self

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (p, sym), c in self._terms:
            factors = []
            if sym is not None:
                factors.append(str(sym))
            if p:
                factors.append("T" if p == 1 else "T^%d" % p)
            mag = abs(c)
            mag_s = str(mag.numerator) if mag.denominator == 1 else "%d/%d" % (mag.numerator, mag.denominator)
            if not factors:
                body = mag_s
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([mag_s] + factors)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def to_json(self):
        """List of [T-power, symbol parts or null, "num/den"]."""
        return [
            [p, list(sym) if sym is not None else None, "%d/%d" % (c.numerator, c.denominator)]
            for (p, sym), c in self._terms
        ]


def _sv(x) -> SymbolicValue:
    if isinstance(x, SymbolicValue):
        return x
    if isinstance(x, (int, Fraction)):
        return SymbolicValue.constant(x)
    raise TypeError("cannot treat %r as a SymbolicValue" % (x,))


def symbolic_mul(a: SymbolicValue, b: SymbolicValue) -> SymbolicValue:
    """Product; symbols multiply by the stuffle of their compositions.

    >>> print(symbolic_mul(SymbolicValue.symbol((2,)), SymbolicValue.symbol((2,))))
    2*z(2,2) + z(4)
    """
    out = []
    for (p, x), c in a.terms():
        for (q, y), d in b.terms():
            if x is None or y is None:
                out.append(((p + q, x if y is None else y), c * d))
                continue
            for w, n in quasi_shuffle_exponents(x, y).items():
                out.append(((p + q, MZVSymbol(w)), c * d * n))
    return SymbolicValue(out)


_POS_CACHE: Dict[Tuple[int, ...], SymbolicValue] = {}


def _gzeta_positive(s: Tuple[int, ...]) -> SymbolicValue:
    out = _POS_CACHE.get(s)
    if out is not None:
        return out
    if s[0] >= 2:
        out = SymbolicValue.symbol(s)
    elif s == (1,):
        out = SymbolicValue.T()
    else:
        m = 0
        while m < len(s) and s[m] == 1:
            m += 1
        shorter = s[1:]  # (1_{m-1}, s')
        acc = symbolic_mul(_gzeta_positive(shorter), SymbolicValue.T())
        for w, c in quasi_shuffle_exponents(shorter, (1,)).items():
            if w == s:
                assert c == m
                continue
            acc = acc - _gzeta_positive(w) * c
        out = acc / m
    with _LOCK:
        _POS_CACHE[s] = out
    return out


def gzeta_positive(s: Sequence[int]) -> SymbolicValue:
    """gζ(s) for s_i >= 1 as a T-polynomial over convergent symbols.

    >>> print(gzeta_positive((1, 1)))
    1/2*T^2 - 1/2*z(2)
    """
    s = tuple(int(x) for x in s)
    if _signature(s) != "positive":
        raise UnsupportedSignature("gzeta_positive needs all arguments >= 1, got %s" % (s,))
    if len(s) > MAX_POSITIVE_DEPTH:
        raise BoundExceeded("depth %d exceeds %d" % (len(s), MAX_POSITIVE_DEPTH))
    return _gzeta_positive(s)


def gzeta(s: Sequence[int]) -> Union[Fraction, SymbolicValue]:
    """Dispatch on the sign pattern; mixed signs raise UnsupportedSignature."""
    s = tuple(int(x) for x in s)
    if _signature(s) == "nonpos":
        return gzeta_nonpos(s)
    return gzeta_positive(s)


def numeric_value(v: SymbolicValue, T_value: float, tol: float = 1e-10) -> float:
    """Substitute floats for T and for every symbol."""
    if not tol >= 1e-10:
        raise ValueError("numeric_value needs tol >= 1e-10")
    n = max(len(v.terms()), 1)
    total = 0.0
    for (p, sym), c in v.terms():
        x = float(c) * float(T_value) ** p
        if sym is not None:
            x *= mzv_numeric(sym, max(tol / n, 1e-12))
        total += x
    return total
