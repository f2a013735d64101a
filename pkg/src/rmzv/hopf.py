"""The quasi-shuffle Hopf algebra on words over the semigroup of letters
``(s, r)`` with ``(s, r)(s', r') = (s + s', r + r')``.

Directions ``r`` are affine forms ``c + m*d`` with rational c, m, so one
product implementation serves both the d-deformed path and concrete
rational directions.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, NamedTuple, Sequence, Tuple

from .ratfunc import RatFunc

__all__ = [
    "Direction",
    "Letter",
    "letter",
    "Word",
    "HopfElement",
    "quasi_shuffle",
    "quasi_shuffle_exponents",
    "deconcat",
    "stuffle_triples",
    "stuffle_oracle",
    "count_stuffle_triples",
    "symmetrization_group",
    "SymmetrizationGroup",
    "hoffman_identity_check",
    "StuffleBoundExceeded",
]


class StuffleBoundExceeded(ValueError):
    pass


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("directions must be exact rationals, got float %r" % x)
    return Fraction(x)


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


@dataclass(frozen=True, order=True)
class Direction:
    """r = c + m*d with c, m >= 0 and r > 0 for small d > 0."""

    c: Fraction
    m: Fraction = Fraction(0)

    def __post_init__(self):
        c, m = _q(self.c), _q(self.m)
        if c < 0 or m < 0:
            raise ValueError("direction needs c >= 0 and m >= 0, got %s, %s" % (c, m))
        if not c and not m:
            raise ValueError("direction must be positive (c = m = 0 given)")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "m", m)

    @classmethod
    def coerce(cls, x) -> "Direction":
        if isinstance(x, Direction):
            return x
        if isinstance(x, tuple):
            return cls(*x)
        return cls(x)

    @classmethod
    def deformed(cls, c) -> "Direction":
        """The canonical path direction ``c + d``."""
        return cls(c, 1)

    def __add__(self, other: "Direction") -> "Direction":
        return Direction(self.c + other.c, self.m + other.m)

    @property
    def concrete(self) -> bool:
        return not self.m

    @property
    def ratfunc(self) -> RatFunc:
        return RatFunc.affine(self.c, self.m)

    def __str__(self):
        if not self.m:
            return _fmt(self.c)
        tail = "d" if self.m == 1 else "%s·d" % _fmt(self.m)
        if not self.c:
            return tail
        return "%s+%s" % (_fmt(self.c), tail)


class Letter(NamedTuple):
    """A semigroup element (s, r)."""

    s: int
    dir: Direction

    def __mul__(self, other: "Letter") -> "Letter":
        return Letter(self.s + other.s, self.dir + other.dir)

    def __str__(self):
        return "(%d|%s)" % (self.s, self.dir)


def letter(s: int, r) -> Letter:
    return Letter(int(s), Direction.coerce(r))


class Word(tuple):
    """An immutable sequence of letters; the empty word is the unit."""

    def __new__(cls, letters: Iterable[Letter] = ()):
        return super().__new__(cls, letters)

    @classmethod
    def of(cls, s: Sequence[int], r: Sequence) -> "Word":
        if len(s) != len(r):
            raise ValueError("need one direction per exponent")
        return cls(letter(a, b) for a, b in zip(s, r))

    @classmethod
    def deformed(cls, s: Sequence[int]) -> "Word":
        """Directions |s_i| + d, the renormalization path."""
        return cls(Letter(int(a), Direction(abs(int(a)), 1)) for a in s)

    @property
    def depth(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(abs(a.s) for a in self)

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(a.s for a in self)

    @property
    def directions(self) -> Tuple[Direction, ...]:
        return tuple(a.dir for a in self)

    def __add__(self, other):
        return Word(tuple.__add__(self, other))

    def __getitem__(self, i):
        out = tuple.__getitem__(self, i)
        return Word(out) if isinstance(i, slice) else out

    def __repr__(self):
        return "Word(%s)" % (str(self),)

    def __str__(self):
        if not self:
            return "[]"
        return "[%s | %s]" % (
            ",".join(str(a.s) for a in self),
            ",".join(str(a.dir) for a in self),
        )


UNIT = Word()


class HopfElement:
    """Finite Q-linear combination of words, stored canonically."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc: Dict[Word, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for w, c in items:
                w = w if isinstance(w, Word) else Word(w)
                acc[w] = acc.get(w, 0) + c
        self._terms = tuple(sorted((w, Fraction(c)) for w, c in acc.items() if c))

    @classmethod
    def word(cls, w: Word, coeff=1) -> "HopfElement":
        return cls({w: coeff})

    def terms(self) -> Tuple[Tuple[Word, Fraction], ...]:
        return self._terms

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def coefficient(self, w: Word) -> Fraction:
        for v, c in self._terms:
            if v == w:
                return c
        return Fraction(0)

    def __add__(self, other: "HopfElement") -> "HopfElement":
        return HopfElement(self._terms + other._terms)

    def __neg__(self):
        return HopfElement((w, -c) for w, c in self._terms)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k) -> "HopfElement":
        return HopfElement((w, c * k) for w, c in self._terms)

    def __mul__(self, other: "HopfElement") -> "HopfElement":
        """Quasi-shuffle product, extended bilinearly."""
        out = []
        for a, x in self._terms:
            for b, y in other._terms:
                out.extend((w, c * x * y) for w, c in quasi_shuffle(a, b))
        return HopfElement(out)

    def map_words(self, fn) -> "HopfElement":
        return HopfElement((fn(w), c) for w, c in self._terms)

    def __eq__(self, other):
        if not isinstance(other, HopfElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        return "HopfElement(%s)" % self

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join("%s*%s" % (_fmt(c), w) for w, c in self._terms)


def _merge(x, y):
    # bare exponents merge by addition, letters by the semigroup law
    return x + y if isinstance(x, int) else x * y


def _qsh(a: Tuple, b: Tuple) -> Dict[Tuple, int]:
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    return _qsh_cached(a, b)


@lru_cache(maxsize=1 << 16)
def _qsh_cached(a: Tuple, b: Tuple) -> Dict[Tuple, int]:
    out: Dict[Tuple, int] = {}
    a1, ar = a[:1], a[1:]
    b1, br = b[:1], b[1:]
    for head, rest in (
        (a1, _qsh(ar, b)),
        (b1, _qsh(a, br)),
        ((_merge(a[0], b[0]),), _qsh(ar, br)),
    ):
        for w, c in rest.items():
            key = head + w
            out[key] = out.get(key, 0) + c
    return out


def quasi_shuffle(a: Word, b: Word) -> HopfElement:
    """a ⧢ b by the first-letter recursion.

    >>> x, y = Word.of([1], [1]), Word.of([1], [1])
    >>> print(quasi_shuffle(x, y))
    2*[1,1 | 1,1] + 1*[2 | 2]
    """
    return HopfElement((Word(w), c) for w, c in _qsh(tuple(a), tuple(b)).items())


def quasi_shuffle_exponents(a: Sequence[int], b: Sequence[int]) -> Dict[Tuple[int, ...], int]:
    """The stuffle of bare exponent vectors (integers under addition)."""
    return dict(_qsh(tuple(a), tuple(b)))


def deconcat(a: Word) -> List[Tuple[Word, Word]]:
    """All k+1 prefix/suffix splits, from (1, a) to (a, 1)."""
    a = Word(a)
    return [(a[:i], a[i:]) for i in range(len(a) + 1)]


# -- stuffle triples ---------------------------------------------------------


def stuffle_triples(k: int, l: int) -> Iterator[Tuple[int, Tuple[int, ...], Tuple[int, ...]]]:
    """Triples (r, alpha, beta): increasing maps of [k], [l] into [r] whose
    images together cover [r].  Positions are 0-based."""
    for r in range(max(k, l), k + l + 1):
        for alpha in itertools.combinations(range(r), k):
            missing = set(range(r)).difference(alpha)
            if len(missing) > l:
                continue
            for beta in itertools.combinations(range(r), l):
                if missing.issubset(beta):
                    yield r, alpha, beta


def count_stuffle_triples(k: int, l: int) -> int:
    """Closed count: sum over r of C(r, k) * C(k, k + l - r)."""
    return sum(math.comb(r, k) * math.comb(k, k + l - r) for r in range(max(k, l), k + l + 1))


def stuffle_oracle(a: Word, b: Word, bound: int = 12) -> HopfElement:
    """a ⧢ b by brute-force enumeration of stuffle triples."""
    k, l = len(a), len(b)
    if k + l > bound:
        raise StuffleBoundExceeded("combined depth %d exceeds %d" % (k + l, bound))
    out = []
    for r, alpha, beta in stuffle_triples(k, l):
        slots: List = [None] * r
        for i, j in enumerate(alpha):
            slots[j] = a[i]
        for i, j in enumerate(beta):
            slots[j] = b[i] if slots[j] is None else slots[j] * b[i]
        out.append((Word(slots), 1))
    return HopfElement(out)


# -- zero clusters -----------------------------------------------------------


class SymmetrizationGroup(NamedTuple):
    """Product of symmetric groups on the zero clusters (0-based blocks)."""

    size: int
    blocks: Tuple[Tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return math.prod(math.factorial(len(b)) for b in self.blocks)

    def permutations(self) -> Iterator[Tuple[int, ...]]:
        """Every element as an index map ``i -> sigma[i]``."""
        per_block = [list(itertools.permutations(b)) for b in self.blocks]
        for choice in itertools.product(*per_block):
            sigma = list(range(self.size))
            for block, image in zip(self.blocks, choice):
                for i, j in zip(block, image):
                    sigma[i] = j
            yield tuple(sigma)


def symmetrization_group(s: Sequence[int]) -> SymmetrizationGroup:
    """Maximal runs of zeros in ``s``.

    >>> symmetrization_group((0, 0, -1, 0)).blocks
    ((0, 1), (3,))
    """
    if any(x > 0 for x in s):
        raise ValueError("zero clusters are defined for non-positive vectors")
    blocks = []
    for key, run in itertools.groupby(range(len(s)), key=lambda i: s[i] == 0):
        if key:
            blocks.append(tuple(run))
    return SymmetrizationGroup(len(s), tuple(blocks))


def _symmetrize(letters: Sequence[Letter]) -> HopfElement:
    return HopfElement((Word(p), 1) for p in itertools.permutations(letters))


def hoffman_identity_check(letters: Sequence[Letter], extra: Letter) -> bool:
    """Check a^(S_k) ⧢ (b) = (a, b)^(S_{k+1}) + sum_i (.., a_i b, ..)^(S_k)."""
    letters = list(letters)
    if len(letters) + 1 > 5:
        raise ValueError("hoffman_identity_check is bounded to depth 5")
    lhs = _symmetrize(letters) * HopfElement.word(Word([extra]))
    rhs = _symmetrize(letters + [extra])
    for i in range(len(letters)):
        merged = letters[:i] + [letters[i] * extra] + letters[i + 1 :]
        rhs = rhs + _symmetrize(merged)
    return lhs == rhs
