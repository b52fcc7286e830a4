import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hilbstrata.hilbert import decomposed, parse_hilbert_polynomial  # noqa: E402
from hilbstrata.orders import MonomialOrder  # noqa: E402
from hilbstrata.report import decompose  # noqa: E402

ACCEPTANCE_LINES = []


def hp(text):
    return decomposed(parse_hilbert_polynomial(text))


@pytest.fixture(scope="session")
def reports():
    """Memoized decompositions keyed by (P, n, order kind)."""
    cache = {}

    def get(P, n, kind):
        key = (P, n, kind)
        if key not in cache:
            cache[key] = decompose(hp(P), n, MonomialOrder.make(kind, n))
        return cache[key]

    return get


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
