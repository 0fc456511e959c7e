"""Shared fixtures: the acceptance corpus and its basis closures."""

from __future__ import annotations

import pytest

from leibniz_engel import fuzz_corpus, lie_set_closure
from leibniz_engel.errors import CapExceeded

ACCEPTANCE_SEED = 2024
ACCEPTANCE_COUNT = 200
ACCEPTANCE_MAX_DIM = 8
GENEROUS_CAP = 100_000


@pytest.fixture(scope="session")
def corpus2024():
    return fuzz_corpus(ACCEPTANCE_SEED, ACCEPTANCE_COUNT, ACCEPTANCE_MAX_DIM)


@pytest.fixture(scope="session")
def closures2024(corpus2024):
    """Basis closure per corpus item; None when the cap was exceeded."""
    out = []
    for algebra, _ in corpus2024:
        try:
            out.append(lie_set_closure(algebra.basis(), cap=GENEROUS_CAP))
        except CapExceeded:
            out.append(None)
    return out


@pytest.fixture(scope="session")
def small_corpus():
    return fuzz_corpus(5, 40, 6)
