import pytest

from mangoldt.arith import build_table


@pytest.fixture(scope="session")
def table_1m():
    """Shared sieve table up to 10^6 (covers every test and the acceptance runs)."""
    return build_table(1_000_000)


@pytest.fixture(scope="session")
def table_10k():
    return build_table(10_000)
