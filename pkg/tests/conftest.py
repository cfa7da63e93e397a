import pytest

from degenlab.catalog import builtin_catalog
from degenlab.cli.suites import Context


@pytest.fixture(scope="session")
def catalog():
    return builtin_catalog()


@pytest.fixture(scope="session")
def context(catalog):
    """Shared suite context: every witness and non-degeneration row is checked once per session."""
    return Context(catalog, seed=0, samples=3, threads=1)


@pytest.fixture(scope="session")
def outcomes(context, catalog):
    return context.outcomes(catalog.variety_names())


@pytest.fixture(scope="session")
def certificates(context, catalog):
    return context.certificates(catalog.variety_names())
