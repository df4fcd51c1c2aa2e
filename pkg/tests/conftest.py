import math

import pytest

from arctancert.verify import OracleConfig


@pytest.fixture(scope="session")
def cfg():
    return OracleConfig(working_digits=50, report_digits=30)


def log_grid(lo, hi, n):
    """n log-spaced points in [lo, hi], endpoints included."""
    la, lb = math.log10(lo), math.log10(hi)
    return [10.0 ** (la + i * (lb - la) / (n - 1)) for i in range(n)]
