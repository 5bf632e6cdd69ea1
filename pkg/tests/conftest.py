import pytest

from klpoly import KLCache


@pytest.fixture(scope="session")
def shared_cache() -> KLCache:
    """One memo table for the whole run; values never go stale."""
    return KLCache()
