from __future__ import annotations

import pytest

from focklab import Multicharge, build_algebra

# the three standard small configurations exercised throughout
CONFIGS = (
    Multicharge(2, (0,)),
    Multicharge(2, (0, 1)),
    Multicharge(3, (0, 1)),
)


@pytest.fixture(scope="session")
def hecke_reps():
    """Cache of built regular representations keyed by (l, n, e)."""
    cache = {}

    def get(l: int, n: int, e: int):
        key = (l, n, e)
        if key not in cache:
            charge = Multicharge(e, tuple(range(l)))
            cache[key] = build_algebra(l, n, charge)
        return cache[key]

    return get
