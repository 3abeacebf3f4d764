from __future__ import annotations

import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from perilab.tl import (
    IDENTITY,
    ZERO,
    TLElement,
    TLError,
    ZeroWord,
    bfs_lengths,
    reduced_words,
    square_root_pair,
    staircase,
    tl_compose,
    tl_equal,
    tl_eval_word,
    tl_generator,
    tl_is_reduced,
    tl_length,
)

words = st.lists(st.integers(-4, 4), max_size=7)


def test_generator_shape():
    g = tl_generator(0)
    assert g.window == (-1, 0)
    assert g.pairs == ((("b", -1), ("b", 0)), (("t", -1), ("t", 0)))


@pytest.mark.parametrize("left, right, equal", [
    ([0, 1, 0], [0], True),
    ([1, 0, 1], [1], True),
    ([0, 2], [2, 0], True),
    ([0, 1], [1, 0], False),
    ([], [], True),
    ([3], [], False),
])
def test_equalities(left, right, equal):
    assert tl_equal(left, right) is equal


def test_square_is_zero():
    assert tl_eval_word([2, 2]).is_zero
    assert tl_eval_word([0, 1, 1, 0]).is_zero


@settings(max_examples=150)
@given(words, words, words)
def test_associative(a, b, c):
    x, y, z = map(tl_eval_word, (a, b, c))
    assert tl_compose(tl_compose(x, y), z) == tl_compose(x, tl_compose(y, z))
    assert tl_eval_word(a + b) == tl_compose(x, y)


@given(words)
def test_identity_and_zero_absorb(w):
    x = tl_eval_word(w)
    assert tl_compose(IDENTITY, x) == x == tl_compose(x, IDENTITY)
    assert tl_compose(ZERO, x).is_zero and tl_compose(x, ZERO).is_zero


@given(words)
def test_json_round_trip(w):
    x = tl_eval_word(w)
    assert TLElement.from_json(x.to_json()) == x


@pytest.mark.parametrize("strands", [2, 3, 4, 5, 6])
def test_nonzero_elements_are_catalan(strands):
    # generators 1..strands-1 live on columns 0..strands-1
    dist = bfs_lengths(range(1, strands), 30)
    assert len(dist) == comb(2 * strands, strands) // (strands + 1)


def test_relations_random():
    rng = random.Random(7)
    for _ in range(200):
        w = [rng.randint(-3, 3) for _ in range(rng.randint(0, 6))]
        x = tl_eval_word(w)
        k = rng.randint(-3, 3)
        g = tl_generator(k)
        assert tl_compose(x, tl_compose(g, g)).is_zero
        for d in (-1, 1):
            assert tl_compose(x, tl_eval_word([k, k + d, k])) == tl_compose(x, g)
        j = k + rng.choice([-3, -2, 2, 3])
        assert tl_compose(x, tl_eval_word([k, j])) == tl_compose(x, tl_eval_word([j, k]))


def test_bad_matchings_rejected():
    with pytest.raises(TLError):
        TLElement.from_json({"pairs": [[["b", 0], ["t", 1]], [["b", 1], ["t", 0]]], "window": [0, 1]})
    with pytest.raises(TLError):
        TLElement.from_json({"pairs": [[["b", 0], ["t", 0]]], "window": [0, 1]})


# ---------------------------------------------------------------- lengths

@pytest.mark.parametrize("word, reduced", [
    ([], True), ([0], True), ([0, 1], True), ([0, 1, 0], False),
    ([0, 2], True), ([1, 0, 2, 1], True), ([0, 0], False)])
def test_is_reduced(word, reduced):
    assert tl_is_reduced(word) is reduced


def test_strict_zero_word():
    with pytest.raises(ZeroWord):
        tl_is_reduced([1, 1], strict=True)


def test_length_of_zero_is_none():
    assert tl_length(ZERO, 5) is None
    assert tl_length(IDENTITY, 5) == 0


def test_reduced_words_max_once():
    n = 0
    for w in reduced_words(range(-1, 3), 8):
        if w:
            n += 1
            assert w.count(max(w)) == 1 and w.count(min(w)) == 1
    assert n > 0


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=1, max_size=6))
def test_reduced_words_agree_with_length(w):
    x = tl_eval_word(w)
    if not x.is_zero:
        assert tl_is_reduced(w) == (tl_length(x, len(w)) == len(w))


# ---------------------------------------------------------------- staircase

def test_staircase_words():
    assert staircase(1) == (1, 0)
    assert staircase(2) == (1, 0, -1, 2, 1, 0)
    assert len(staircase(4)) == 20
    with pytest.raises(TLError):
        staircase(0)


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_square_root_identities(s):
    i = staircase(s)
    j, jp = square_root_pair(s)
    tj = tl_eval_word(j)
    assert not tj.is_zero
    assert tl_eval_word(j + i) == tj
    assert tl_eval_word(jp + j) == tl_eval_word(i)
    assert tl_is_reduced(i)
