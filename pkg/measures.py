#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Piecewise complexity h(u) and minimality index ρ(u)
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from side_distance import l_table, position_sums, r_table
from words import Word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MeasureReport:
    """h and ρ of a word together with positions attaining them

    witness_h is (cut i, letter index a) maximizing r(u(0,i),a)+ℓ(a,u(i,|u|));
    witness_rho is the 1-based position i whose letter maximizes
    r(u(0,i-1),u(i))+ℓ(u(i),u(i,|u|)). Both are None for the empty word.
    """

    word: Word
    h: int
    rho: int
    witness_h: Optional[Tuple[int, int]] = None
    witness_rho: Optional[int] = None


def _h_with_witness(u: Word) -> Tuple[int, Optional[Tuple[int, int]]]:
    if not u:
        return 1, None
    present = np.array(sorted(u.alph()), dtype=np.intp)
    rcells, lcells = r_table(u).cells, l_table(u).cells
    if len(present) < u.alphabet.size:
        rcells, lcells = rcells[:, present], lcells[:, present]
    sums = rcells + lcells
    # argmax on the row-major layout: smallest cut first, then smallest letter
    flat = int(np.argmax(sums))
    i, column = divmod(flat, len(present))
    return int(sums[i, column]) + 1, (i, int(present[column]))


def _rho_with_witness(u: Word) -> Tuple[int, Optional[int]]:
    if not u:
        return 0, None
    sums = position_sums(u)
    # argmax returns the first maximum, so the smallest position wins ties
    best = int(np.argmax(sums))
    return int(sums[best]) + 1, best + 1


def h(u: Word) -> int:
    """Piecewise complexity: max over cuts and letters of r + ℓ + 1"""
    return _h_with_witness(u)[0]


def rho(u: Word) -> int:
    """Minimality index: 1 + max over positions of r-vector + ℓ-vector"""
    return _rho_with_witness(u)[0]


def measure(u: Word) -> MeasureReport:
    h_value, witness_h = _h_with_witness(u)
    rho_value, witness_rho = _rho_with_witness(u)
    logger.debug(f"measured word of length {len(u)}: h={h_value} rho={rho_value}")
    return MeasureReport(u, h_value, rho_value, witness_h, witness_rho)
