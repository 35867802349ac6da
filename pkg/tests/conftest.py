import pytest

from actsep.catalog import catalog_monoids, enumerate_acts


@pytest.fixture(scope="session")
def small_corpus():
    """Every act with carrier <= 3 over every catalog monoid of order <= 3."""
    out = []
    for entry in catalog_monoids():
        if entry.monoid.order > 3:
            continue
        for size in range(1, 4):
            out.extend(enumerate_acts(entry.monoid, size))
    return out
