import itertools
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rmzv.hopf import (
    UNIT,
    Direction,
    HopfElement,
    Letter,
    StuffleBoundExceeded,
    Word,
    count_stuffle_triples,
    deconcat,
    hoffman_identity_check,
    letter,
    quasi_shuffle,
    quasi_shuffle_exponents,
    stuffle_oracle,
    stuffle_triples,
    symmetrization_group,
)

directions = st.builds(
    lambda c, m: Direction(c, m) if c or m else Direction(1, 0),
    st.integers(0, 3),
    st.integers(0, 2),
)
letters = st.builds(letter, st.integers(-3, 3), directions)


def words(max_size=3, min_size=0):
    return st.lists(letters, min_size=min_size, max_size=max_size).map(Word)


def test_direction_validation_and_rendering():
    assert str(Direction(1, 1)) == "1+d"
    assert str(Direction(0, 1)) == "d"
    assert str(Direction(2)) == "2"
    assert Direction(1, 0) + Direction(0, 1) == Direction(1, 1)
    with pytest.raises(ValueError):
        Direction(0, 0)
    with pytest.raises(ValueError):
        Direction(-1, 0)
    with pytest.raises(TypeError):
        Direction.coerce(1.5)


def test_letter_semigroup():
    assert letter(-1, 2) * letter(-2, Direction(0, 1)) == letter(-3, Direction(2, 1))


def test_word_basics():
    w = Word.deformed((0, -2))
    assert str(w) == "[0,-2 | d,2+d]"
    assert w.weight == 2 and w.depth == 2
    assert isinstance(w[1:], Word)
    assert w.exponents == (0, -2)


def test_quasi_shuffle_examples():
    x = Word.of([1], [1])
    assert quasi_shuffle(x, x) == HopfElement({Word.of([1, 1], [1, 1]): 2, Word.of([2], [2]): 1})
    assert quasi_shuffle(UNIT, x) == HopfElement.word(x)
    assert quasi_shuffle_exponents((1,), (2,)) == {(1, 2): 1, (2, 1): 1, (3,): 1}
    assert quasi_shuffle_exponents((1, 1), (1,)) == {(1, 1, 1): 3, (2, 1): 1, (1, 2): 1}


@given(words(), words())
def test_commutative(a, b):
    assert quasi_shuffle(a, b) == quasi_shuffle(b, a)


@given(words(2), words(2), words(2))
def test_associative(a, b, c):
    x = HopfElement.word(a) * HopfElement.word(b) * HopfElement.word(c)
    y = HopfElement.word(a) * (HopfElement.word(b) * HopfElement.word(c))
    assert x == y


@settings(max_examples=60)
@given(words(3), words(3))
def test_oracle_agrees(a, b):
    assert quasi_shuffle(a, b) == stuffle_oracle(a, b)


def test_oracle_bound():
    w = Word.of([1] * 7, [1] * 7)
    with pytest.raises(StuffleBoundExceeded):
        stuffle_oracle(w, w)


@pytest.mark.parametrize("k,l", [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (4, 2)])
def test_triple_counts(k, l):
    triples = list(stuffle_triples(k, l))
    assert len(triples) == count_stuffle_triples(k, l)
    assert len(set(triples)) == len(triples)
    for r, alpha, beta in triples:
        assert set(alpha) | set(beta) == set(range(r))
        assert list(alpha) == sorted(alpha) and list(beta) == sorted(beta)


def test_triple_count_values():
    # Delannoy-type numbers: (1,1) -> 3, (2,1) -> 5, (2,2) -> 13
    assert [count_stuffle_triples(*p) for p in [(1, 1), (2, 1), (2, 2), (3, 3)]] == [3, 5, 13, 63]


def test_term_count_matches_triples():
    a = Word(letter(-i, i + 1) for i in range(3))
    b = Word(letter(-i - 3, 2 * i + 7) for i in range(2))
    total = sum(c for _, c in quasi_shuffle(a, b))
    assert total == count_stuffle_triples(3, 2)


def test_deconcat():
    w = Word.of([0, -1, -2], [1, 2, 3])
    splits = deconcat(w)
    assert len(splits) == 4
    assert splits[0] == (UNIT, w) and splits[-1] == (w, UNIT)
    assert all(x + y == w for x, y in splits)


@given(words(4))
def test_coassociative(w):
    left = Counter((x, y, z) for a, z in deconcat(w) for x, y in deconcat(a))
    right = Counter((x, y, z) for x, b in deconcat(w) for y, z in deconcat(b))
    assert left == right


def _delta(elem):
    out = Counter()
    for w, c in elem:
        for x, y in deconcat(w):
            out[(x, y)] += c
    return out


@settings(max_examples=40)
@given(words(2), words(2))
def test_coproduct_is_multiplicative(a, b):
    lhs = _delta(quasi_shuffle(a, b))
    rhs = Counter()
    for a1, a2 in deconcat(a):
        for b1, b2 in deconcat(b):
            for x, c in quasi_shuffle(a1, b1):
                for y, e in quasi_shuffle(a2, b2):
                    rhs[(x, y)] += c * e
    assert +lhs == +rhs


def test_symmetrization_group():
    g = symmetrization_group((0, 0, -1, 0))
    assert g.blocks == ((0, 1), (3,))
    assert g.order == 2
    assert sorted(g.permutations()) == [(0, 1, 2, 3), (1, 0, 2, 3)]
    assert symmetrization_group((0, 0, 0)).order == 6
    assert symmetrization_group((-1, -2)).order == 1
    with pytest.raises(ValueError):
        symmetrization_group((0, 1))


@settings(max_examples=30)
@given(st.lists(letters, min_size=1, max_size=3), letters)
def test_hoffman_identity(ls, extra):
    assert hoffman_identity_check(ls, extra)


def test_hopf_element_arithmetic():
    x = HopfElement.word(Word.of([1], [1]), Fraction(1, 2))
    assert (x - x).terms() == ()
    assert x.scale(2).coefficient(Word.of([1], [1])) == 1
    assert str(HopfElement()) == "0"
