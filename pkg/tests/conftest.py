from __future__ import annotations

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(autouse=True)
def _fresh_oracle_cache():
    from fermionic.oracle.oracles import clear_cache

    yield
    clear_cache()
