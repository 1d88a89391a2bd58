#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Brute-force reference implementations built only on downsets

Nothing here touches the side-distance machinery, so a disagreement between
an oracle and a fast path always points at one of two independent codes.
Everything is exponential in the word length; keep inputs small.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Union

from words import INFINITE, Infinite, Word, require_same_alphabet, subword_tuples

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundedDistance:
    """δ(u,v) searched up to a bound

    value is the exact distance (a natural or INFINITE) unless exceeded is
    set, in which case value is the bound kmax and δ(u,v) > kmax.
    """

    value: Union[int, Infinite]
    exceeded: bool = False

    @property
    def is_exact(self) -> bool:
        return not self.exceeded

    def __str__(self) -> str:
        if self.exceeded:
            return f"EXCEEDS({self.value})"
        return str(self.value)


def _from_difference(difference, kmax: int) -> BoundedDistance:
    if not difference:
        return BoundedDistance(kmax, exceeded=True)
    return BoundedDistance(min(len(s) for s in difference) - 1)


def delta_bf(u: Word, v: Word, kmax: int, budget: Optional[int] = None) -> BoundedDistance:
    """Subword distance: shortest distinguisher length minus one"""
    require_same_alphabet(u, v)
    if u.letters == v.letters:
        return BoundedDistance(INFINITE)
    if kmax < 0:
        raise ValueError(f"kmax must be non-negative, got {kmax}")
    difference = subword_tuples(u, kmax + 1, budget) ^ subword_tuples(v, kmax + 1, budget)
    return _from_difference(difference, kmax)


def h_bf(u: Word, budget: Optional[int] = None) -> int:
    """1 + max δ(u, u_1·a·u_2) over every insertion of a letter"""
    kmax = len(u) + 2
    # ↓u is shared by every comparison of this call
    reference = subword_tuples(u, kmax + 1, budget)
    best = 0
    for position in u.cuts():
        for a in range(u.alphabet.size):
            inserted = subword_tuples(u.inserted(position, a), kmax + 1, budget)
            best = max(best, _from_difference(reference ^ inserted, kmax).value)
    return best + 1


def rho_bf(u: Word, budget: Optional[int] = None) -> int:
    """1 + max δ(u, u_1·u_2) over every deletion of one letter; 0 for ε"""
    if not u:
        return 0
    kmax = len(u) + 1
    reference = subword_tuples(u, kmax + 1, budget)
    best = 0
    for position in range(1, len(u) + 1):
        deleted = subword_tuples(u.deleted(position), kmax + 1, budget)
        best = max(best, _from_difference(reference ^ deleted, kmax).value)
    return best + 1


def is_reduced_bf(u: Word, m: int, budget: Optional[int] = None) -> bool:
    """True iff no strict subword of u is ~m-equivalent to u"""
    # one-letter deletions suffice: ~m classes are convex for ≼
    reference = subword_tuples(u, m, budget)
    for position in range(1, len(u) + 1):
        if subword_tuples(u.deleted(position), m, budget) == reference:
            return False
    return True
