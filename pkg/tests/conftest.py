from functools import lru_cache

import pytest

from psemigroups import build_psemigroup, validate_generators


@lru_cache(maxsize=None)
def _build(gens: tuple[int, ...], p: int):
    return build_psemigroup(validate_generators(list(gens)), p)


@pytest.fixture(scope="session")
def build():
    """Memoized (gens, p) -> PSemigroup shared across the whole run."""
    return _build
