#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Shared fixtures, word builders and hypothesis strategies for the test suite
"""

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from words import Alphabet, Word, make_word

settings.register_profile(
    "piecewise",
    max_examples=500,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("piecewise")

EXAMPLE = "ABBACCBCCABAABC"
LETTERS = "ABCD"


def alphabet_of(size):
    return Alphabet(tuple(LETTERS[:size]))


def word(text, letters=None):
    """Word over letters (default: first-occurrence order of text)"""
    return make_word(text, Alphabet.of(letters) if letters else None)


@st.composite
def alphabets(draw, max_letters=4):
    return alphabet_of(draw(st.integers(1, max_letters)))


@st.composite
def words(draw, alphabet=None, max_letters=4, min_size=0, max_size=60):
    if alphabet is None:
        alphabet = draw(alphabets(max_letters))
    letters = draw(st.lists(st.integers(0, alphabet.size - 1), min_size=min_size, max_size=max_size))
    return Word(alphabet, tuple(letters))


@st.composite
def word_tuples(draw, count, max_letters=4, max_size=30):
    """count words over one shared alphabet"""
    alphabet = draw(alphabets(max_letters))
    return tuple(draw(words(alphabet=alphabet, max_size=max_size)) for _ in range(count))


@st.composite
def full_words(draw, max_letters=4, max_size=12):
    """Words in which every alphabet letter occurs"""
    alphabet = draw(alphabets(max_letters))
    base = list(draw(st.permutations(range(alphabet.size))))
    extra = draw(st.lists(st.integers(0, alphabet.size - 1), max_size=max(0, max_size - alphabet.size)))
    letters = draw(st.permutations(base + extra))
    return Word(alphabet, tuple(letters))


@pytest.fixture
def example():
    return make_word(EXAMPLE)


@pytest.fixture
def abc():
    return Alphabet.of("ABC")
