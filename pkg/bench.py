#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Timing harness for the linear and bilinear algorithms
"""

import time
import random
import logging
import string
from typing import Callable, Dict, List, Optional, Sequence

from measures import h, rho
from periodic import pow_measure
from words import Alphabet, Word

logger = logging.getLogger(__name__)

DEFAULT_SIZES = (250_000, 500_000, 1_000_000)


def bench(name: str, func: Callable[[], object]) -> float:
    """Run func once and return the elapsed wall-clock seconds"""
    start = time.perf_counter()
    result = func()
    elapsed = time.perf_counter() - start
    logger.info(f"{name} {elapsed:.6f} sec (result={result})")
    return elapsed


def bench_alphabet(letters: int) -> Alphabet:
    symbols = string.ascii_uppercase + string.ascii_lowercase + string.digits
    if not 1 <= letters <= len(symbols):
        raise ValueError(f"bench alphabets have 1..{len(symbols)} letters, got {letters}")
    return Alphabet(tuple(symbols[:letters]))


def random_word(size: int, letters: int, seed: Optional[int] = None) -> Word:
    """Uniform random word; every letter forced to occur when size allows"""
    rng = random.Random(seed)
    alphabet = bench_alphabet(letters)
    indices = [rng.randrange(letters) for _ in range(size)]
    if size >= letters:
        indices[:letters] = rng.sample(range(letters), letters)
    return Word(alphabet, tuple(indices))


def warm_up(func: Callable[[Word], object], letters: int) -> None:
    """One call on a tiny word so compiled kernels are ready before timing"""
    func(random_word(max(letters, 8), letters, seed=0))


def scaling_run(func: Callable[[Word], object], sizes: Sequence[int], letters: int,
                seed: Optional[int] = None) -> Dict[str, List[float]]:
    """Time func on random words of each size; ratios between successive sizes"""
    warm_up(func, letters)
    timings = []
    for size in sizes:
        word = random_word(size, letters, seed)
        timings.append(bench(f"{getattr(func, '__name__', 'func')}[{size}]", lambda: func(word)))
    ratios = [b / a if a > 0 else float("inf") for a, b in zip(timings, timings[1:])]
    return {"sizes": list(sizes), "seconds": timings, "ratios": ratios}


def run_suite(sizes: Sequence[int] = DEFAULT_SIZES, letters: int = 26,
              pow_size: int = 10_000, pow_letters: int = 10, pow_exponent: int = 10 ** 18,
              seed: Optional[int] = None) -> List[Dict[str, object]]:
    """h and ρ at doubling sizes, then one large power"""
    results = []
    for name, func in (("h", h), ("rho", rho)):
        run = scaling_run(func, sizes, letters, seed)
        for size, seconds in zip(run["sizes"], run["seconds"]):
            results.append({"name": name, "size": size, "letters": letters, "seconds": seconds})
        logger.info(f"{name} scaling ratios: {run['ratios']}")
    warm_up(lambda w: pow_measure(w, pow_exponent), pow_letters)
    word = random_word(pow_size, pow_letters, seed)
    seconds = bench(f"pow[{pow_size}]^{pow_exponent}", lambda: pow_measure(word, pow_exponent).h)
    results.append({"name": "pow", "size": pow_size, "letters": pow_letters,
                    "n": pow_exponent, "seconds": seconds})
    return results
