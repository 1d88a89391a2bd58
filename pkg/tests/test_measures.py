#!/usr/bin/python3

import pytest
from hypothesis import given

from conftest import alphabet_of, word, word_tuples, words
from measures import h, measure, rho
from oracle import h_bf, rho_bf
from side_distance import l_general, l_table, l_vector, r_general, r_table, r_vector
from words import Alphabet, Word, all_words, make_word


def test_remark_words():
    abc = Alphabet.of("ABC")
    u = make_word("CAACBABA", abc)
    assert h(u) == 5
    assert rho(u) == 3
    long_word = make_word("CBCBCBCBBCABBABABAAA", abc)
    assert h(long_word) == 10
    assert rho(long_word) == 6


def test_example_word(example):
    report = measure(example)
    assert report.rho == 5
    assert report.h == 6
    position = report.witness_rho
    assert r_vector(example)[position - 1] + l_vector(example)[position - 1] == 4
    assert report.witness_rho == 2
    assert report.witness_h == (1, example.alphabet.index("B"))


def test_empty_word():
    empty = make_word("", Alphabet.of("AB"))
    report = measure(empty)
    assert (report.h, report.rho) == (1, 0)
    assert report.witness_h is None
    assert report.witness_rho is None


def test_single_letter():
    assert h(word("A")) == 2
    assert rho(word("A")) == 1


def test_two_letter_instance():
    u = word("AABB")
    assert h(u) == rho(u) + 1
    assert h(u) == h_bf(u)


@given(words())
def test_witnesses_attain_maxima(u):
    report = measure(u)
    if not u:
        return
    i, a = report.witness_h
    assert r_table(u)[i, a] + l_table(u)[i, a] + 1 == report.h
    position = report.witness_rho
    assert r_vector(u)[position - 1] + l_vector(u)[position - 1] + 1 == report.rho


@given(words())
def test_h_exceeds_rho(u):
    report = measure(u)
    assert report.h >= report.rho + 1
    assert report.rho <= len(u)
    assert report.h <= len(u) + 1


@given(words(max_letters=2))
def test_two_letters_tight(u):
    assert h(u) == rho(u) + 1


@pytest.mark.slow
def test_two_letters_tight_exhaustive():
    for u in all_words(alphabet_of(2), 12):
        assert h(u) == rho(u) + 1


@given(word_tuples(2, max_size=30))
def test_monotone_under_concatenation(pair):
    u, v = pair
    uv = u + v
    assert h(u) <= h(uv)
    assert h(v) <= h(uv)
    assert rho(u) <= rho(uv)
    assert rho(v) <= rho(uv)


@given(word_tuples(2, max_size=30))
def test_subadditivity(pair):
    u, v = pair
    uv = u + v
    assert rho(uv) <= rho(u) + rho(v)
    assert h(uv) <= max(h(u) + rho(v), rho(u) + h(v))


@given(words())
def test_mirror_invariance(u):
    assert h(u) == h(u.mirror())
    assert rho(u) == rho(u.mirror())


@given(words(min_size=1))
def test_alphabet_extension_is_neutral(u):
    wider = Alphabet(u.alphabet.letters + ("Z",))
    widened = Word(wider, u.letters)
    assert h(widened) == h(u)
    assert rho(widened) == rho(u)


@given(words(max_size=40))
def test_side_distance_below_rho(u):
    value = rho(u)
    for a in range(u.alphabet.size):
        assert r_table(u)[len(u), a] <= value


@given(word_tuples(3, max_size=20))
def test_extension_by_rho(triple):
    u, v, t = triple
    # r(uv,t) <= ρ(u) + r(v,t) and ℓ(t,uv) <= ρ(v) + ℓ(t,u)
    if not t:
        return
    assert r_general(u + v, t) <= rho(u) + r_general(v, t)
    assert l_general(t, u + v) <= rho(v) + l_general(t, u)


def _check_against_oracle(size, length):
    for u in all_words(alphabet_of(size), length):
        report = measure(u)
        assert report.h == h_bf(u), u.text
        assert report.rho == rho_bf(u), u.text


@pytest.mark.slow
@pytest.mark.parametrize("size,length", [(2, 10), (3, 7)])
def test_oracle_equivalence_exhaustive(size, length):
    _check_against_oracle(size, length)
