#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Alphabets, words, the subword relation and Simon's congruence

Words store dense letter indices into their alphabet so that every inner
loop elsewhere can use alphabet-indexed arrays. The brute-force parts of
this module (downsets and the ~k check) are the semantic ground truth the
fast algorithms are tested against.
"""

import os
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Sequence, Tuple, Union

from errors import (
    AlphabetMismatchError, InfiniteArithmeticError, ResourceBudgetError,
    WordValidationError,
)

logger = logging.getLogger(__name__)


def read_int_setting(name: str, default: int) -> int:
    """Read a positive integer from the environment, falling back to default"""
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
        if value <= 0:
            raise ValueError(f"{name} must be positive")
        return value
    except ValueError:
        logger.error(f"Invalid {name}={raw!r}, using default {default}")
        return default


# Maximum number of subwords a single downset enumeration may store
DOWNSET_BUDGET = read_int_setting("PIECEWISE_DOWNSET_BUDGET", 2 ** 24)


class Infinite:
    """The side distance of equal words: compares above every natural"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"

    def __str__(self) -> str:
        return "INFINITE"

    def __hash__(self) -> int:
        return hash("INFINITE")

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True

    def _reject(self, *args):
        raise InfiniteArithmeticError("arithmetic on INFINITE is not defined; use min/comparison")

    __add__ = __radd__ = __sub__ = __rsub__ = __mul__ = __rmul__ = _reject
    __int__ = __index__ = _reject


INFINITE = Infinite()

# A side distance is a natural number or INFINITE
SideDistance = Union[int, Infinite]


@dataclass(frozen=True)
class Alphabet:
    """Ordered finite set of printable letters with dense indices"""

    letters: Tuple[str, ...]
    _index: Dict[str, int] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        letters = tuple(self.letters)
        if not letters:
            raise WordValidationError("an alphabet needs at least one letter")
        for position, letter in enumerate(letters, start=1):
            if not isinstance(letter, str) or len(letter) != 1 or not letter.isprintable() or letter.isspace():
                raise WordValidationError(
                    f"alphabet symbol {letter!r} at position {position} is not a printable letter",
                    symbol=str(letter), position=position,
                )
        index = {}
        for position, letter in enumerate(letters):
            if letter in index:
                raise WordValidationError(
                    f"alphabet letter {letter!r} is repeated at position {position + 1}",
                    symbol=letter, position=position + 1,
                )
            index[letter] = position
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "_index", index)

    @classmethod
    def of(cls, text: str) -> "Alphabet":
        """Alphabet of the letters of text, in first-occurrence order"""
        return cls(tuple(dict.fromkeys(text)))

    @property
    def size(self) -> int:
        return len(self.letters)

    @property
    def text(self) -> str:
        return "".join(self.letters)

    def index(self, letter: str) -> int:
        try:
            return self._index[letter]
        except KeyError:
            raise WordValidationError(
                f"symbol {letter!r} is not in alphabet {self.text}", symbol=letter
            ) from None

    def __contains__(self, letter: str) -> bool:
        return letter in self._index

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class Word:
    """Immutable finite word stored as letter indices over an alphabet"""

    alphabet: Alphabet
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        if letters:
            low, high = min(letters), max(letters)
            if low < 0 or high >= self.alphabet.size:
                bad = next(i for i, a in enumerate(letters) if not 0 <= a < self.alphabet.size)
                raise WordValidationError(
                    f"letter index {letters[bad]} at position {bad + 1} is outside "
                    f"alphabet {self.alphabet.text}",
                    position=bad + 1,
                )
        object.__setattr__(self, "letters", letters)

    # Sequence protocol

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.alphabet, self.letters[item])
        return self.letters[item]

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __add__(self, other: "Word") -> "Word":
        require_same_alphabet(self, other)
        return Word(self.alphabet, self.letters + other.letters)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            raise ValueError(f"word power must be non-negative, got {n}")
        return Word(self.alphabet, self.letters * n)

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"Word({self.text!r}, alphabet={self.alphabet.text!r})"

    # 1-based accessors

    @property
    def text(self) -> str:
        letters = self.alphabet.letters
        return "".join(letters[a] for a in self.letters)

    def factor(self, i: int, j: int) -> "Word":
        """The factor u(i,j) between cuts i <= j"""
        if not 0 <= i <= j <= len(self):
            raise IndexError(f"factor ({i},{j}) is not within cuts 0..{len(self)}")
        return Word(self.alphabet, self.letters[i:j])

    def letter(self, i: int) -> int:
        """The i-th letter u(i), counting from 1"""
        if not 1 <= i <= len(self):
            raise IndexError(f"letter position {i} is not within 1..{len(self)}")
        return self.letters[i - 1]

    def cuts(self) -> range:
        return range(len(self) + 1)

    def alph(self) -> FrozenSet[int]:
        return frozenset(self.letters)

    def mirror(self) -> "Word":
        return Word(self.alphabet, self.letters[::-1])

    def inserted(self, position: int, letter: int) -> "Word":
        """u(0,i) a u(i,|u|)"""
        return Word(self.alphabet, self.letters[:position] + (letter,) + self.letters[position:])

    def deleted(self, position: int) -> "Word":
        """u with its letter u(i) removed, i counting from 1"""
        return Word(self.alphabet, self.letters[:position - 1] + self.letters[position:])


@dataclass(frozen=True)
class WordSet:
    """Duplicate-free set of words over one alphabet, kept in shortlex order"""

    alphabet: Alphabet
    members: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_tuples(cls, alphabet: Alphabet, tuples: Iterable[Tuple[int, ...]]) -> "WordSet":
        ordered = tuple(sorted(set(tuples), key=lambda s: (len(s), s)))
        return cls(alphabet, ordered)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Word]:
        return (Word(self.alphabet, s) for s in self.members)

    def __contains__(self, word: Word) -> bool:
        return word.alphabet == self.alphabet and word.letters in self.as_set()

    def as_set(self) -> FrozenSet[Tuple[int, ...]]:
        return frozenset(self.members)

    def texts(self) -> Tuple[str, ...]:
        return tuple(w.text for w in self)


def require_same_alphabet(u: Word, v: Word) -> None:
    """Cross-word operations never unify alphabets implicitly"""
    if u.alphabet != v.alphabet:
        raise AlphabetMismatchError(
            f"words use different alphabets: {u.alphabet.text} and {v.alphabet.text}"
        )


def make_word(text: str, alphabet: Optional[Alphabet] = None) -> Word:
    """Build a word from its symbols; the alphabet defaults to alph(text)"""
    if alphabet is None:
        if not text:
            raise WordValidationError("the empty word needs an explicit alphabet")
        alphabet = Alphabet.of(text)
    indices = []
    for position, symbol in enumerate(text, start=1):
        if symbol not in alphabet:
            raise WordValidationError(
                f"symbol {symbol!r} at position {position} is not in alphabet {alphabet.text}",
                symbol=symbol, position=position,
            )
        indices.append(alphabet.index(symbol))
    return Word(alphabet, tuple(indices))


def mirror(u: Word) -> Word:
    return u.mirror()


def is_subword(u: Word, v: Word) -> bool:
    """u ≼ v, by one greedy left-to-right scan of v"""
    require_same_alphabet(u, v)
    needed = u.letters
    if not needed:
        return True
    matched = 0
    for a in v.letters:
        if a == needed[matched]:
            matched += 1
            if matched == len(needed):
                return True
    return False


def _subsequences(letters: Tuple[int, ...], k: int, budget: int) -> FrozenSet[Tuple[int, ...]]:
    # the empty word alone already takes one slot
    if budget < 1:
        raise ResourceBudgetError(budget, 1)
    found = {()}
    for a in letters:
        new = {s + (a,) for s in found if len(s) < k}
        new -= found
        if len(found) + len(new) > budget:
            logger.warning(f"Downset of a word of length {len(letters)} up to {k} exceeds budget {budget}")
            raise ResourceBudgetError(budget, len(found) + len(new))
        found |= new
    return frozenset(found)


def subword_tuples(u: Word, k: int, budget: Optional[int] = None) -> FrozenSet[Tuple[int, ...]]:
    """Raw index tuples of ↓u ∩ A^{≤k}; the unsorted form of downset_upto"""
    if k < 0:
        raise ValueError(f"subword length bound must be non-negative, got {k}")
    if budget is None:
        budget = DOWNSET_BUDGET
    return _subsequences(u.letters, min(k, len(u)), budget)


def downset_upto(u: Word, k: int, budget: Optional[int] = None) -> WordSet:
    """Exactly the subwords of u of length at most k"""
    return WordSet.from_tuples(u.alphabet, subword_tuples(u, k, budget))


def sim_k(u: Word, v: Word, k: int, budget: Optional[int] = None) -> bool:
    """Simon's congruence u ~k v"""
    require_same_alphabet(u, v)
    if u.letters == v.letters:
        return True
    return subword_tuples(u, k, budget) == subword_tuples(v, k, budget)


def all_words(alphabet: Alphabet, max_length: int, min_length: int = 0) -> Iterator[Word]:
    """Every word over alphabet with length in min_length..max_length, shortlex"""
    for length in range(min_length, max_length + 1):
        for letters in product(range(alphabet.size), repeat=length):
            yield Word(alphabet, letters)


def letters_text(alphabet: Alphabet, letters: Sequence[int]) -> str:
    return "".join(alphabet.letters[a] for a in letters)
