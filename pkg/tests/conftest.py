import pytest

from chromaspec import ChromaticCache, enumerate_census


@pytest.fixture(scope="session")
def engine_cache():
    """One chromatic cache shared across the whole run."""
    return ChromaticCache()


@pytest.fixture(scope="session")
def census():
    """Census accessor; results are memoized inside the library."""
    return enumerate_census
