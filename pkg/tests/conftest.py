import pytest

from bifuzzy.core import BiCapacity, Capacity, SignedCoalition, coalition


def pair(pos=(), neg=()):
    return SignedCoalition.of(pos, neg)


@pytest.fixture
def mu3():
    """Non-additive capacity on three criteria."""
    values = {(): 0.0, (1,): 0.2, (2,): 0.3, (3,): 0.4,
              (1, 2): 0.5, (1, 3): 0.7, (2, 3): 0.8, (1, 2, 3): 1.0}
    return Capacity.from_function(3, lambda m: next(
        v for k, v in values.items() if coalition(k) == m))


@pytest.fixture
def mb2():
    """Bi-capacity on two criteria with every free value distinct."""
    values = {
        ((), ()): 0.0, ((1, 2), ()): 1.0, ((), (1, 2)): -1.0,
        ((1,), (2,)): 0.2, ((2,), (1,)): -0.2,
        ((1,), ()): 0.5, ((2,), ()): 0.4,
        ((), (1,)): -0.6, ((), (2,)): -0.3,
    }
    return BiCapacity(2, {pair(*k): v for k, v in values.items()})


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
