#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Simon's side distances r(u,t) and ℓ(t,u)

Three ways of getting at them live here:

* ``r_general`` / ``l_general`` follow the textbook recursion directly and
  serve as the reference path;
* ``r_table`` / ``l_table`` give r and ℓ for every prefix (suffix) and
  every letter in O(|A|·|u|);
* ``r_vector`` / ``l_vector`` give only the per-position values
  r(a_1⋯a_{i-1}, a_i) and ℓ(a_i, a_{i+1}⋯a_m) in O(|A|+|u|) with a stack.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import FrozenSet, List, Tuple

import numpy as np

try:
    from numba import jit
    nopython = True
except ImportError:
    def jit(*args, **kwargs):
        return lambda f: f
    nopython = False

from words import INFINITE, SideDistance, Word, require_same_alphabet

logger = logging.getLogger(__name__)


def _table_dtype(length: int):
    # every cell is bounded by the prefix length
    return np.int32 if length < 2 ** 31 - 1 else np.int64


@dataclass(frozen=True)
class _SideTable:
    word: Word
    cells: np.ndarray = field(repr=False, compare=False)

    def __post_init__(self):
        self.cells.setflags(write=False)

    def __getitem__(self, key: Tuple[int, int]) -> int:
        i, a = key
        return int(self.cells[i, a])

    def __eq__(self, other) -> bool:
        return (
            type(other) is type(self)
            and other.word == self.word
            and np.array_equal(other.cells, self.cells)
        )

    __hash__ = None

    @property
    def shape(self) -> Tuple[int, int]:
        return self.cells.shape

    def row(self, i: int) -> List[int]:
        return self.cells[i].tolist()

    def column(self, a: int) -> List[int]:
        return self.cells[:, a].tolist()


class RTable(_SideTable):
    """cells[i][a] = r(u(0,i), a) for i in Cuts(u)"""


class LTable(_SideTable):
    """cells[i][a] = ℓ(a, u(i,|u|)) for i in Cuts(u)"""


@dataclass(frozen=True)
class RVector:
    """entries[i-1] = r(u(0,i-1), u(i)) for i = 1..|u|"""

    word: Word
    entries: Tuple[int, ...]
    stack_ops: int = field(default=0, compare=False)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


@dataclass(frozen=True)
class LVector:
    """entries[i-1] = ℓ(u(i), u(i,|u|)) for i = 1..|u|"""

    word: Word
    entries: Tuple[int, ...]
    stack_ops: int = field(default=0, compare=False)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


def r_general(u: Word, t: Word) -> SideDistance:
    """r(u,t) by the R1-R3 recursion, memoized on (prefix length, letter)"""
    require_same_alphabet(u, t)
    if not t:
        return INFINITE
    letters = u.letters

    @lru_cache(maxsize=None)
    def r_letter(i: int, a: int) -> int:
        # last occurrence j of a in u(0,i), as a 1-based position
        j = i
        while j > 0 and letters[j - 1] != a:
            j -= 1
        if j == 0:
            return 0
        # u(0,i) = u(0,j-1)·a·u(j,i) with a not in u(j,i)
        return 1 + r_word(j - 1, frozenset(letters[j - 1:i]))

    def r_word(i: int, alph: FrozenSet[int]) -> int:
        return min(r_letter(i, b) for b in alph)

    return r_word(len(letters), frozenset(t.letters))


def l_general(t: Word, u: Word) -> SideDistance:
    """ℓ(t,u), the mirror notion of r"""
    return r_general(u.mirror(), t.mirror())


def _r_cells(word: Word) -> np.ndarray:
    n, k = len(word), word.alphabet.size
    dtype = _table_dtype(n)
    letters = np.fromiter(word.letters, dtype=np.intp, count=n)
    cells = np.zeros((n + 1, k), dtype=dtype)
    # at_last[a] holds the row r[locc[a], .]; every locc starts at row 0
    at_last = np.zeros((k, k), dtype=dtype)
    if nopython:
        _fill_r_cells(letters, cells, at_last)
    else:
        _fill_r_rows(letters, cells, at_last)
    return cells


@jit(nopython=nopython, cache=True)
def _fill_r_cells(letters, cells, at_last):
    size = cells.shape[1]
    for i in range(1, letters.shape[0] + 1):
        b = letters[i - 1]
        for a in range(size):
            cells[i, a] = min(cells[i - 1, a], at_last[a, b] + 1)
        cells[i, b] = cells[i - 1, b] + 1
        at_last[b, :] = cells[i, :]


def _fill_r_rows(letters, cells, at_last):
    for i, b in enumerate(letters.tolist(), start=1):
        previous = cells[i - 1]
        row = cells[i]
        np.minimum(previous, at_last[:, b] + 1, out=row)
        row[b] = previous[b] + 1
        at_last[b] = row


def r_table(u: Word) -> RTable:
    """The r-table of u in one left-to-right pass"""
    cells = _r_cells(u)
    logger.debug(f"r-table of shape {cells.shape} computed")
    return RTable(u, cells)


def l_table(u: Word) -> LTable:
    """The ℓ-table of u, read off the r-table of its mirror"""
    cells = np.ascontiguousarray(_r_cells(u.mirror())[::-1])
    return LTable(u, cells)


@jit(nopython=nopython, cache=True)
def _stack_scan_into(letters, locc, entries, stack):
    top = 0
    ops = 1
    for i in range(1, len(letters) + 1):
        a = letters[i - 1]
        last = locc[a]
        # drop positions >= last, keeping the smallest of them on top
        while top > 0 and stack[top - 1] >= last:
            top -= 1
            ops += 1
        j = stack[top]
        entries[i - 1] = entries[j - 1] + 1 if j > 0 else 0
        top += 1
        stack[top] = i
        ops += 1
        locc[a] = i
    return ops


def _stack_scan(letters: Tuple[int, ...], size: int) -> Tuple[np.ndarray, int]:
    """r-vector entries by the canonical-representative stack, plus stack ops"""
    n = len(letters)
    if nopython:
        entries = np.zeros(n, dtype=np.intp)
        ops = _stack_scan_into(
            np.fromiter(letters, dtype=np.intp, count=n),
            np.zeros(size, dtype=np.intp),
            entries,
            np.zeros(n + 1, dtype=np.intp),
        )
        return entries, int(ops)
    entries = [0] * n
    ops = _stack_scan_into(letters, [0] * size, entries, [0] * (n + 1))
    return np.array(entries, dtype=np.intp), ops


def r_vector(u: Word) -> RVector:
    entries, ops = _stack_scan(u.letters, u.alphabet.size)
    return RVector(u, tuple(entries.tolist()), ops)


def l_vector(u: Word) -> LVector:
    entries, ops = _stack_scan(u.letters[::-1], u.alphabet.size)
    return LVector(u, tuple(entries[::-1].tolist()), ops)


def position_sums(u: Word) -> np.ndarray:
    """r-vector plus ℓ-vector, entry i-1 for position i"""
    forward, _ = _stack_scan(u.letters, u.alphabet.size)
    backward, _ = _stack_scan(u.letters[::-1], u.alphabet.size)
    return forward + backward[::-1]


def delta_insert(u1: Word, a: int, u2: Word) -> int:
    """δ(u1·u2, u1·a·u2) = r(u1,a) + ℓ(a,u2)"""
    require_same_alphabet(u1, u2)
    if not 0 <= a < u1.alphabet.size:
        raise ValueError(f"letter index {a} is outside alphabet {u1.alphabet.text}")
    return int(_r_cells(u1)[-1, a]) + int(_r_cells(u2.mirror())[-1, a])
