import pytest

from problingo.packs import clear_pack_cache
from problingo.registry import default_registry


@pytest.fixture(scope="session")
def registry():
    return default_registry()


@pytest.fixture(autouse=True)
def _fresh_pack_cache():
    # Tests that point at temporary pack dirs must not poison the shared cache.
    yield
    clear_pack_cache()
