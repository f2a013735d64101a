"""Exact scalars: Bernoulli numbers, zeta at non-positive integers, compositions,
and a double-precision evaluator for convergent multiple zeta values."""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Dict, Iterable, Sequence, Tuple

import numpy as np

__all__ = [
    "Composition",
    "NumericFailure",
    "bernoulli",
    "zeta_nonpositive",
    "mzv_numeric",
]


class NumericFailure(ArithmeticError):
    """The tail estimate could not certify the requested tolerance."""


class Composition(tuple):
    """An argument vector ``(s1, ..., sk)`` of integers, k >= 1."""

    def __new__(cls, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ValueError("a composition needs at least one part")
        return super().__new__(cls, parts)

    @property
    def depth(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(abs(p) for p in self)

    @property
    def convergent(self) -> bool:
        return all(p >= 1 for p in self) and self[0] >= 2

    def __repr__(self):
        return "Composition(%s)" % ",".join(map(str, self))


# B_0..B_n, grown on demand; guarded so concurrent callers see one table.
_BERNOULLI = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """B_n in the x/(e^x - 1) convention, so B_1 = -1/2."""
    if n < 0:
        raise ValueError("bernoulli index must be >= 0, got %d" % n)
    if n < len(_BERNOULLI):
        return _BERNOULLI[n]
    with _BERNOULLI_LOCK:
        table = _BERNOULLI
        for m in range(len(table), n + 1):
            if m > 1 and m % 2:
                table.append(Fraction(0))
                continue
            # sum_{j<=m} C(m+1, j) B_j = 0
            acc = Fraction(0)
            c = 1
            for j in range(m):
                acc += c * table[j]
                c = c * (m + 1 - j) // (j + 1)
            table.append(-acc / (m + 1))
        return table[n]


def zeta_nonpositive(s: int) -> Fraction:
    """zeta(s) for an integer s <= 0, via zeta(-i) = (-1)^i B_{i+1}/(i+1)."""
    if s > 0:
        raise ValueError("zeta_nonpositive needs s <= 0, got %d" % s)
    i = -s
    value = bernoulli(i + 1) / (i + 1)
    return -value if i % 2 else value


# ---------------------------------------------------------------------------
# numeric MZVs
#
# With t_0 = 1 and t_j(n) = sum_{m > n} m^{-s_j} t_{j-1}(m), zeta(s) = t_k(0).
# Each t_j has an asymptotic expansion in pure inverse powers of n (no logs,
# because s_1 >= 2), which Euler-Maclaurin gives term by term.  The recursion
# is run exactly below a cutoff N and the expansion supplies t_j(N).

_Expansion = Dict[int, Fraction]  # exponent p -> coefficient of n^{-p}


def _tail_of_power(p: int, order: int) -> _Expansion:
    """Asymptotic expansion of sum_{m > n} m^{-p} for p >= 2, up to n^{-order}."""
    out: _Expansion = {p - 1: Fraction(1, p - 1), p: Fraction(-1, 2)}
    rising = Fraction(p)  # (p)_{2k-1}
    fact = 2  # (2k)!
    k = 1
    while p + 2 * k - 1 <= order:
        e = p + 2 * k - 1
        out[e] = out.get(e, Fraction(0)) + bernoulli(2 * k) / fact * rising
        rising *= (p + 2 * k - 1) * (p + 2 * k)
        fact *= (2 * k + 1) * (2 * k + 2)
        k += 1
    return {e: c for e, c in out.items() if e <= order and c}


def _tail_expansions(parts: Sequence[int], order: int):
    expansions = []
    current: _Expansion = {0: Fraction(1)}
    for s in parts:
        nxt: _Expansion = {}
        for e, c in current.items():
            for e2, c2 in _tail_of_power(e + s, order).items():
                nxt[e2] = nxt.get(e2, Fraction(0)) + c * c2
        current = {e: c for e, c in nxt.items() if c}
        expansions.append(current)
    return expansions


def _eval_expansion(exp: _Expansion, n: int) -> Tuple[float, float]:
    """Value at n and magnitude of the highest-order retained term."""
    total = 0.0
    last = 0.0
    top = max(exp)
    for e, c in exp.items():
        term = float(c) * float(n) ** (-e)
        total += term
        if e == top:
            last = abs(term)
    return total, last


def mzv_numeric(c: Sequence[int], tol: float = 1e-12) -> float:
    """Double-precision value of a convergent MZV with absolute error <= tol.

    >>> round(mzv_numeric((2,)), 10)
    1.6449340668
    """
    comp = Composition(c)
    if not comp.convergent:
        raise ValueError("%r is not convergent (need s1 >= 2, all si >= 1)" % (comp,))
    if not tol >= 1e-12:
        raise ValueError("tol must be >= 1e-12")
    order = comp.weight + 2 * 12
    expansions = _tail_expansions(comp, order)
    # grow the cutoff until the last retained Euler-Maclaurin term of every
    # level is well below tol
    N = 32
    for _ in range(12):
        starts = [_eval_expansion(e, N) for e in expansions]
        if all(last <= tol * 1e-3 for _, last in starts):
            break
        N *= 2
    else:
        raise NumericFailure("tail expansion does not reach tol=%g for %r" % (tol, comp))

    m = np.arange(1, N + 1, dtype=float)
    prev = np.ones(N)  # t_{j-1}(m) for m = 1..N
    for (start, _), s in zip(starts, comp):
        terms = m ** (-s) * prev
        # t_j(n) for n = 0..N: start + sum_{n < m <= N} terms
        suffix = np.concatenate((np.cumsum(terms[::-1])[::-1], [0.0])) + start
        prev = suffix[1:]
        head = suffix[0]
    return float(head)
