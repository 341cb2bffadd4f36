from __future__ import annotations

import sys
from itertools import product
from math import comb

import numpy as np
from hypothesis import HealthCheck, settings, strategies as st

from schurbound.altmap import random_altmap
from schurbound.fieldmat import FpMatrix

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SMALL_PRIMES = [2, 3, 5]


@st.composite
def fp_matrices(draw, primes=SMALL_PRIMES, max_rows=6, max_cols=6):
    p = draw(st.sampled_from(primes))
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    entries = draw(st.lists(st.integers(0, p - 1), min_size=r * c, max_size=r * c))
    return FpMatrix(p, np.array(entries, dtype=np.int64).reshape(r, c))


@st.composite
def alt_maps(draw, primes=SMALL_PRIMES, min_n=2, max_n=7, max_m=8, min_m=1):
    """Random spanning maps; sparse densities make radicals and stars likelier."""
    p = draw(st.sampled_from(primes))
    n = draw(st.integers(min_n, max_n))
    m = draw(st.integers(min_m, min(max_m, comb(n, 2))))
    seed = draw(st.integers(0, 2**32 - 1))
    density = draw(st.sampled_from([0.0, 0.2, 0.5, 1.0]))
    return random_altmap(p, n, m, seed=seed, density=density)


def span_size(rows, p):
    """Brute force: number of distinct vectors in the row space."""
    rows = [tuple(r) for r in rows]
    if not rows:
        return 1
    width = len(rows[0])
    seen = set()
    for coeffs in product(range(p), repeat=len(rows)):
        seen.add(tuple(sum(c * r[i] for c, r in zip(coeffs, rows)) % p for i in range(width)))
    return len(seen)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
