#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Arch factorizations and the arch-jumping functions α and β

An arch is a factor containing every letter of the alphabet while none of
its strict prefixes does. Co-arches are their mirror images and are only
reached through mirror duality here.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from errors import PositionError
from words import Word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ArchFactorization:
    """w = s_1 ⋯ s_m · t with cuts 0 = c_0 < c_1 < ... < c_m"""

    word: Word
    cuts: Tuple[int, ...]

    @property
    def arch_count(self) -> int:
        return len(self.cuts) - 1

    @property
    def rest(self) -> Word:
        return self.word.factor(self.cuts[-1], len(self.word))

    def arches(self) -> List[Word]:
        return [self.word.factor(i, j) for i, j in zip(self.cuts, self.cuts[1:])]

    def is_fully_arched(self) -> bool:
        return self.cuts[-1] == len(self.word)


def arch_factorize(w: Word) -> ArchFactorization:
    """Hébrard's arch factorization in one pass"""
    size = w.alphabet.size
    # seen[a] is the number of the arch in which a was last seen
    seen = [0] * size
    arch_number = 1
    count = 0
    cuts = [0]
    for position, a in enumerate(w.letters, start=1):
        if seen[a] != arch_number:
            seen[a] = arch_number
            count += 1
            if count == size:
                cuts.append(position)
                arch_number += 1
                count = 0
    logger.debug(f"factorized word of length {len(w)} into {len(cuts) - 1} arches")
    return ArchFactorization(w, tuple(cuts))


def is_fully_arched(w: Word) -> bool:
    return arch_factorize(w).is_fully_arched()


def _check_cut(w: Word, i: int) -> None:
    if not 0 <= i <= len(w):
        raise PositionError(f"position {i} is not a cut of a word of length {len(w)}")


def alpha(w: Word, i: int) -> Optional[int]:
    """Smallest j > i such that w(i,j) is an arch, or None"""
    _check_cut(w, i)
    size = w.alphabet.size
    seen = set()
    letters = w.letters
    for j in range(i, len(letters)):
        seen.add(letters[j])
        if len(seen) == size:
            return j + 1
    return None


def beta(w: Word, i: int) -> Optional[int]:
    """Largest j < i such that w(j,i) is a co-arch, or None"""
    _check_cut(w, i)
    size = w.alphabet.size
    seen = set()
    letters = w.letters
    for j in range(i - 1, -1, -1):
        seen.add(letters[j])
        if len(seen) == size:
            return j
    return None


def coarch_cuts(w: Word) -> Tuple[int, ...]:
    """The β-chain |w| > β(|w|) > β²(|w|) > ... of the co-arch factorization"""
    mirrored = arch_factorize(w.mirror())
    return tuple(len(w) - c for c in mirrored.cuts)
