"""Algebraic Birkhoff decomposition of the regularized character Z.

The counterterm and renormalized parts follow the recursion over proper
deconcatenation splits x = x' x'':

    phi_-(x) = -P(Z(x) + sum phi_-(x') Z(x''))
    phi_+(x) = (id - P)(Z(x) + sum phi_-(x') Z(x''))

The ordered-partition closed form is kept alongside as an independent check.
"""

from __future__ import annotations

import threading
from typing import Iterator, NamedTuple, Optional, Tuple

from .hopf import Word
from .laurent import (
    LaurentSeries,
    coeff_at,
    project_pole,
    project_power,
    series_add,
    series_mul,
)
from .zreg import RATFUNC, _check_nonpos, _hi_of, default_window, pole_bound, window_margin, z_nonpos

__all__ = [
    "BirkhoffResult",
    "ordered_partitions",
    "partition_vectors",
    "phi_minus",
    "phi_plus",
    "birkhoff",
    "phi_plus_closed",
    "zeta_directional",
    "clear_caches",
]

_LOCK = threading.Lock()
_MINUS: dict = {}
_PLUS: dict = {}


def clear_caches() -> None:
    with _LOCK:
        _MINUS.clear()
        _PLUS.clear()


class BirkhoffResult(NamedTuple):
    minus: LaurentSeries
    plus: LaurentSeries


def ordered_partitions(k: int) -> Iterator[Tuple[int, ...]]:
    """All 2^(k-1) compositions of k >= 1, in lexicographic order."""
    if k < 1:
        raise ValueError("ordered partitions need k >= 1")
    if k == 1:
        yield (1,)
        return
    for first in range(1, k):
        for rest in ordered_partitions(k - first):
            yield (first,) + rest
    yield (k,)


def partition_vectors(word: Word, parts) -> Tuple[Word, ...]:
    out = []
    i = 0
    for p in parts:
        out.append(word[i : i + p])
        i += p
    return tuple(out)


def _hi(word: Word, window) -> int:
    hi = _hi_of(window)
    return default_window(word)[1] if hi is None else hi


def _prepared(word: Word, hi: int, ring) -> LaurentSeries:
    """Z(x) + sum over proper splits of phi_-(x') Z(x''), through e^hi."""
    acc = z_nonpos(word, hi, ring)
    for i in range(1, len(word)):
        head, tail = word[:i], word[i:]
        m = phi_minus(head, hi + pole_bound(tail), ring)
        acc = series_add(acc, series_mul(m, z_nonpos(tail, hi + pole_bound(head), ring)))
    return acc


def _minus_core(word: Word, ring) -> LaurentSeries:
    key = (word, ring)
    out = _MINUS.get(key)
    if out is None:
        out = -project_pole(_prepared(word, -1, ring))
        with _LOCK:
            _MINUS[key] = out
    return out


def phi_minus(word: Word, window=None, ring=RATFUNC) -> LaurentSeries:
    """Counterterm; only pole coefficients are nonzero.

    Everything at e^k, k >= 0, vanishes, so any requested ``hi`` is exact.
    """
    word = Word(word)
    _check_nonpos(word)
    hi = _hi(word, window)
    if not word:
        return LaurentSeries.scalar(ring.const(1), 0, max(hi, 0))
    core = _minus_core(word, ring)
    return project_pole(core, max(hi, core.lo))


def phi_plus(word: Word, window=None, ring=RATFUNC) -> LaurentSeries:
    """Renormalized part; only e^k with k >= 0 are nonzero."""
    word = Word(word)
    _check_nonpos(word)
    hi = max(_hi(word, window), 0)
    if not word:
        return LaurentSeries.scalar(ring.const(1), 0, hi)
    key = (word, hi, ring)
    out = _PLUS.get(key)
    if out is None:
        out = project_power(_prepared(word, hi, ring))
        with _LOCK:
            _PLUS[key] = out
    return out


def birkhoff(word: Word, window=None, ring=RATFUNC) -> BirkhoffResult:
    return BirkhoffResult(phi_minus(word, window, ring), phi_plus(word, window, ring))


def _nest(blocks, hi: int, ring) -> LaurentSeries:
    """Z(b_p) P̌(Z(b_{p-1}) ⋯ P̌(Z(b_1))), known through e^hi."""
    if len(blocks) == 1:
        return z_nonpos(blocks[0], hi, ring)
    *inner, last = blocks
    inner_lo = -sum(pole_bound(b) for b in inner)
    # P̌ keeps only poles, so the inner nest is needed through e^-1 only
    checked = -project_pole(_nest(inner, -1, ring), hi + pole_bound(last))
    return series_mul(z_nonpos(last, hi - inner_lo, ring), checked)


def phi_plus_closed(word: Word, window=None, ring=RATFUNC) -> LaurentSeries:
    """Sum over ordered partitions of P̃(Z(s^(p)) P̌(⋯ P̌(Z(s^(1)))⋯))."""
    word = Word(word)
    _check_nonpos(word)
    hi = max(_hi(word, window), 0)
    if not word:
        return LaurentSeries.scalar(ring.const(1), 0, hi)
    acc: Optional[LaurentSeries] = None
    for parts in ordered_partitions(len(word)):
        term = project_power(_nest(partition_vectors(word, parts), hi, ring))
        acc = term if acc is None else series_add(acc, term)
    return acc


def zeta_directional(word: Word, window=None, ring=RATFUNC):
    """The e -> 0 limit of phi_+: a rational function of d (or its expansion
    at d = 0 when ``ring`` is a DeltaRing).

    Windows are demand driven, so e^0 is exact at hi = 0; by default the
    computation runs through e^MZV_WINDOW_MARGIN.
    """
    word = Word(word)
    if not word:
        return ring.const(1)
    if window is None:
        window = window_margin()
    return coeff_at(phi_plus(word, window, ring), 0)
