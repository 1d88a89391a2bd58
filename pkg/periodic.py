#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Periodic arch factorizations of u^n and the fast h(u^n), ρ(u^n)

Over u^ω every cut has an arch starting at it, and α(i+L) = α(i)+L with
L = |u|. The arch cuts λ_k = α^k(0) therefore only depend on the residue
λ_k mod L, and the residue sequence is eventually periodic. From that
period (p arches covering δ copies of u) we get

    h(u^(n+δ)) = h(u^n) + p   and   ρ(u^(n+δ)) = ρ(u^n) + p

once n·L covers the transients of u and of its mirror plus one span, so
only a short power u^(n0) is ever materialized.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from errors import InvariantViolation, PreconditionError
from measures import MeasureReport, measure
from words import Word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PeriodData:
    """Transient, arch-period and span of the arch factorization of u^ω"""

    L: int
    K: int
    T: int
    p: int
    span: int

    @property
    def delta(self) -> int:
        """Copies of u advanced per arch-period"""
        return self.span // self.L

    @property
    def slope(self) -> Fraction:
        return Fraction(self.delta, self.p)


@dataclass(frozen=True)
class PowerReport:
    """h and ρ of u^n with the reduction that produced them"""

    word: Word
    n: int
    h: int
    rho: int
    n0: int
    jumps: int
    period: Optional[PeriodData] = None


def _require_full_alphabet(u: Word) -> None:
    present = u.alph()
    missing = [u.alphabet.letters[a] for a in range(u.alphabet.size) if a not in present]
    if missing:
        raise PreconditionError(
            f"every alphabet letter must occur in the word; missing: {''.join(missing)}",
            missing=missing,
        )


def alpha_residues(u: Word) -> Tuple[int, ...]:
    """For each cut i in 0..L-1 of u^ω, the arch length α(i) - i"""
    _require_full_alphabet(u)
    L, size = len(u), u.alphabet.size
    doubled = u.letters + u.letters
    # next_at[a]: smallest 1-based position > current cut holding letter a
    next_at = [0] * size
    residues = [0] * L
    for cut in range(2 * L - 1, -1, -1):
        next_at[doubled[cut]] = cut + 1
        if cut < L:
            residues[cut] = max(next_at) - cut
    return tuple(residues)


def arch_cuts(u: Word, count: int) -> List[int]:
    """λ_0, ..., λ_{count-1} over u^ω without materializing it"""
    residues = alpha_residues(u)
    L = len(u)
    cuts = [0]
    while len(cuts) < count:
        cut = cuts[-1]
        cuts.append(cut + residues[cut % L])
    return cuts[:count]


def _first_repeat(residues: Tuple[int, ...], start: int) -> Tuple[int, int, int, int]:
    # (k0, cut0, k, cut): α^k(start) is the first cut whose residue was seen at step k0
    L = len(residues)
    first_seen: Dict[int, Tuple[int, int]] = {}
    cut, k = start, 0
    while cut % L not in first_seen:
        first_seen[cut % L] = (k, cut)
        cut += residues[cut % L]
        k += 1
    k0, cut0 = first_seen[cut % L]
    return k0, cut0, k, cut


def arch_period_from(u: Word, start: int) -> Tuple[int, int, int]:
    """(k, p, span) of the first residue repeat along α^k(start)"""
    k0, cut0, k, cut = _first_repeat(alpha_residues(u), start)
    return k0, k - k0, cut - cut0


def arch_period(u: Word) -> PeriodData:
    """Transient K, T, arch-period p and span Δ of u^ω, starting at cut 0"""
    L, size = len(u), u.alphabet.size
    K, T, k, cut = _first_repeat(alpha_residues(u), 0)
    data = PeriodData(L=L, K=K, T=T, p=k - K, span=cut - T)
    if data.span % L != 0:
        raise InvariantViolation(f"span {data.span} is not a multiple of {L}")
    if data.T + data.span > (size + 1) * L:
        raise InvariantViolation(
            f"transient {data.T} plus span {data.span} exceeds (|A|+1)·L = {(size + 1) * L}"
        )
    logger.debug(f"period data for word of length {L}: {data}")
    return data


def _threshold(u: Word, data: PeriodData) -> int:
    mirrored = arch_period(u.mirror())
    # u^n must cover both transients plus one span; span >= L keeps this >= 1
    return -(-(data.T + mirrored.T + data.span) // data.L)


def pow_measure(u: Word, n: int) -> PowerReport:
    """h(u^n) and ρ(u^n) through the eventual periodicity of arches"""
    if n < 0:
        raise ValueError(f"exponent must be non-negative, got {n}")
    _require_full_alphabet(u)
    if n == 0:
        return PowerReport(u, 0, 1, 0, 0, 0)
    data = arch_period(u)
    n_min = _threshold(u, data)
    if n <= n_min + data.delta:
        direct = measure(u ** n)
        return PowerReport(u, n, direct.h, direct.rho, n, 0, data)
    n0 = n_min + (n - n_min) % data.delta
    jumps = (n - n0) // data.delta
    reduced: MeasureReport = measure(u ** n0)
    logger.debug(f"power {n} reduced to {n0} with {jumps} jumps of {data.p}")
    return PowerReport(
        u, n, reduced.h + jumps * data.p, reduced.rho + jumps * data.p, n0, jumps, data
    )


def h_pow(u: Word, n: int) -> int:
    return pow_measure(u, n).h


def rho_pow(u: Word, n: int) -> int:
    return pow_measure(u, n).rho
