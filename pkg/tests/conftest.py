import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from classicalseq import FIXTURES, factorize, generate_moments  # noqa: E402

CLASSICAL = ("hermite", "laguerre", "legendre", "bessel")


@lru_cache(maxsize=None)
def moments_for(name, N):
    fx = FIXTURES[name]
    return generate_moments(fx.pearson, fx.mu0, N)


@lru_cache(maxsize=None)
def state_for(name, n):
    return factorize(moments_for(name, n + 4), n)


@pytest.fixture(params=CLASSICAL)
def family(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
