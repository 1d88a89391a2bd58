#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Self check of every component against known reference values
"""

import time
import logging
import threading
from fractions import Fraction

from arch import alpha, arch_factorize, beta
from measures import h, rho
from oracle import delta_bf, h_bf, rho_bf
from periodic import arch_period, h_pow
from side_distance import l_vector, r_table, r_vector
from words import Alphabet, is_subword, make_word, sim_k

logger = logging.getLogger(__name__)

COMPONENTS = ("words", "side_distance", "measures", "arch", "periodic", "oracle")

# Dictionary to store health status
_health_status = {
    component: {"status": "unknown", "last_check": 0, "message": "Not checked yet"}
    for component in COMPONENTS
}

# Lock for thread-safe updates
_status_lock = threading.Lock()

EXAMPLE = "ABBACCBCCABAABC"


def update_health_status(component, status, message=None):
    """Update health status for a component"""
    with _status_lock:
        _health_status[component] = {
            "status": status,
            "last_check": time.time(),
            "message": message
        }


def _expect(label, actual, expected):
    if actual != expected:
        raise AssertionError(f"{label}: expected {expected}, got {actual}")


def check_words():
    abc = Alphabet.of("SIMONTULA")
    _expect("SIMON ≼ STIMULATION", is_subword(make_word("SIMON", abc), make_word("STIMULATION", abc)), True)
    ab = Alphabet.of("AB")
    _expect("ABAB ~1 AABB", sim_k(make_word("ABAB", ab), make_word("AABB", ab), 1), True)
    _expect("ABAB ~2 AABB", sim_k(make_word("ABAB", ab), make_word("AABB", ab), 2), False)


def check_side_distance():
    u = make_word(EXAMPLE)
    _expect("r(i,A)", r_table(u).column(0), [0, 1, 1, 1, 2, 1, 1, 1, 1, 1, 2, 2, 3, 4, 4, 3])
    _expect("r-vector", list(r_vector(u).entries), [0, 0, 1, 1, 0, 1, 1, 2, 3, 1, 2, 2, 3, 3, 2])
    _expect("l-vector", list(l_vector(u).entries), [3, 4, 3, 2, 4, 3, 2, 2, 1, 2, 1, 1, 0, 0, 0])


def check_measures():
    _expect("rho(ABBACCBCCABAABC)", rho(make_word(EXAMPLE)), 5)
    _expect("h(CAACBABA)", h(make_word("CAACBABA", Alphabet.of("ABC"))), 5)
    _expect("rho(CAACBABA)", rho(make_word("CAACBABA", Alphabet.of("ABC"))), 3)


def check_arch():
    w = make_word(EXAMPLE)
    _expect("arch cuts", arch_factorize(w).cuts, (0, 5, 10, 15))
    _expect("alpha(2), alpha(3)", (alpha(w, 2), alpha(w, 3)), (5, 7))
    _expect("beta(15)", beta(w, 15), 12)


def check_periodic():
    data = arch_period(make_word("AABBCC"))
    _expect("AABBCC period", (data.p, data.T, data.span, data.slope), (3, 5, 12, Fraction(2, 3)))
    u = make_word("AABBCC")
    _expect("h(AABBCC^6) - h(AABBCC^4)", h_pow(u, 6) - h_pow(u, 4), 3)


def check_oracle():
    ab = Alphabet.of("AB")
    _expect("delta_bf(ABAB, AABB)", delta_bf(make_word("ABAB", ab), make_word("AABB", ab), 5).value, 1)
    u = make_word("CAACBABA", Alphabet.of("ABC"))
    _expect("h_bf(CAACBABA)", h_bf(u), 5)
    _expect("rho_bf(CAACBABA)", rho_bf(u), 3)


_CHECKS = {
    "words": check_words,
    "side_distance": check_side_distance,
    "measures": check_measures,
    "arch": check_arch,
    "periodic": check_periodic,
    "oracle": check_oracle,
}


def check_component(component):
    """Run the fixtures of one component and record the outcome"""
    try:
        _CHECKS[component]()
        update_health_status(component, "ok", "All reference values reproduced")
    except Exception as e:
        logger.error(f"Health check of {component} failed: {e}")
        update_health_status(component, "error", f"Exception: {str(e)}")


def check_health():
    """Run health checks and return status"""
    for component in COMPONENTS:
        check_component(component)

    # Return a copy of the health status
    with _status_lock:
        return {component: dict(status) for component, status in _health_status.items()}


def is_healthy(status):
    return all(entry["status"] == "ok" for entry in status.values())
