import itertools

import pytest
from hypothesis import given, strategies as st

from slidecx.coxeter import (
    Permutation, Word, all_permutations, apply_word, compose, demazure_product, identity, inverse,
    is_reduced_word, is_tilde_reduced, left_multiply, length, longest_permutation, permutation_from_one_line,
    reduced_word, right_multiply, tilde_delta, word_from_string,
)
from slidecx.errors import NotABijection, ParseError, RankMismatch


def W(n, *letters):
    return Word(n, letters)


@st.composite
def words(draw, max_rank=5, max_len=10):
    n = draw(st.integers(2, max_rank))
    letters = draw(st.lists(st.integers(1, n - 1), max_size=max_len))
    return Word(n, tuple(letters))


@st.composite
def perms(draw, max_rank=6):
    n = draw(st.integers(1, max_rank))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


# parsing

def test_parse_one_line():
    assert permutation_from_one_line("1432").images == (1, 4, 3, 2)
    assert permutation_from_one_line("1") == identity(1)
    assert permutation_from_one_line("1,4,3,2") == permutation_from_one_line("1432")


def test_parse_rejects_non_bijection():
    with pytest.raises(NotABijection):
        permutation_from_one_line("15,4,2,3,1")
    with pytest.raises(NotABijection):
        permutation_from_one_line("1224")


@pytest.mark.parametrize("text", ["14a2", "", "1,,2", "-1"])
def test_parse_rejects_bad_text(text):
    with pytest.raises(ParseError):
        permutation_from_one_line(text)


def test_csv_needed_for_large_rank():
    w = longest_permutation(11)
    assert w.one_line() == "11,10,9,8,7,6,5,4,3,2,1"
    assert permutation_from_one_line(w.one_line()) == w


def test_word_parse_and_rank():
    q = word_from_string("3,2,1,3,2,3")
    assert q.n == 4 and str(q) == "3,2,1,3,2,3"
    assert word_from_string("", 3) == Word(3, ())
    with pytest.raises(RankMismatch):
        word_from_string("3", 3)
    with pytest.raises(ParseError):
        word_from_string("0,1")


# length and products

def test_length_examples():
    assert length(identity(5)) == 0
    assert length(longest_permutation(4)) == 6
    assert length(longest_permutation(5)) == 10
    assert length(permutation_from_one_line("1432")) == 3


def test_longest_permutation():
    assert longest_permutation(1).images == (1,)
    assert longest_permutation(4).images == (4, 3, 2, 1)


def test_apply_word_examples():
    assert apply_word(Word(3, ())) == identity(3)
    assert apply_word(W(4, 3, 2, 1, 3, 2, 3)) == longest_permutation(4)
    assert apply_word(W(4, 2, 3, 2)) == permutation_from_one_line("1432")
    assert apply_word(W(4, 3, 2, 3)) == permutation_from_one_line("1432")


def test_is_reduced_word_examples():
    assert not is_reduced_word(W(2, 1, 1))
    assert is_reduced_word(W(4, 2, 3, 2))
    assert not is_reduced_word(W(4, 2, 3, 2, 3))


def test_demazure_examples():
    assert demazure_product(W(2, 1, 1)) == Permutation((2, 1))
    assert demazure_product(W(4, 3, 2, 1, 3, 2, 3)) == longest_permutation(4)
    assert demazure_product(W(4, 2, 3, 2, 3)) == permutation_from_one_line("1432")


def test_tilde_delta_examples():
    assert tilde_delta(W(3, 1, 1, 2, 1, 2, 2, 2)) == W(3, 1, 2, 1, 2)
    assert tilde_delta(W(4, 3, 2, 1, 3)) == W(4, 3, 2, 1, 3)
    assert tilde_delta(Word(3, ())) == Word(3, ())


def test_left_and_right_multiplication():
    w = permutation_from_one_line("2413")
    s1 = Permutation((2, 1, 3, 4))
    assert right_multiply(w, 1) == compose(w, s1) == Permutation((4, 2, 1, 3))
    assert left_multiply(1, w) == compose(s1, w) == Permutation((1, 4, 2, 3))


def test_reduced_word_counts_are_deterministic():
    # brute force over all words of length l(w), in two different scan orders
    for w in all_permutations(4):
        ell = length(w)
        fwd = [a for a in itertools.product(range(1, 4), repeat=ell) if apply_word(Word(4, a)) == w]
        rev = [a for a in itertools.product(range(3, 0, -1), repeat=ell) if apply_word(Word(4, a)) == w]
        assert len(fwd) == len(rev) >= 1
    assert sum(1 for a in itertools.product(range(1, 4), repeat=6) if apply_word(Word(4, a)) == longest_permutation(4)) == 16


# properties

@given(words())
def test_demazure_ignores_repeats(q):
    assert demazure_product(tilde_delta(q)) == demazure_product(q)


@given(words())
def test_tilde_delta_idempotent(q):
    once = tilde_delta(q)
    assert tilde_delta(once) == once
    assert is_tilde_reduced(once)


@given(words())
def test_reduced_words_demazure_is_product(q):
    if is_reduced_word(q):
        assert demazure_product(q) == apply_word(q)


@given(words())
def test_demazure_length_bound(q):
    assert length(demazure_product(q)) <= len(q)
    assert length(demazure_product(q)) >= length(apply_word(q))


@given(perms(), st.data())
def test_length_changes_by_one(w, data):
    if w.n < 2:
        return
    i = data.draw(st.integers(1, w.n - 1))
    assert abs(length(right_multiply(w, i)) - length(w)) == 1


@given(perms())
def test_reduced_word_roundtrip(w):
    r = reduced_word(w)
    assert len(r) == length(w)
    assert apply_word(r) == w
    assert compose(w, inverse(w)) == identity(w.n)


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        compose(identity(3), identity(4))
    with pytest.raises(RankMismatch):
        Word(3, (3,))
