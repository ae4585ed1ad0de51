import pytest

from tracecc import SweepSpec, make_field, run_sweep

# every (p, m) reachable by the default sweep, p^m <= 10^5
SWEEP_POINTS = [(p, m) for p in (3, 5, 7) for m in range(2, 6)]


@pytest.fixture(scope="session")
def f9():
    return make_field(3, 2)


@pytest.fixture(scope="session")
def f27():
    return make_field(3, 3)


@pytest.fixture(scope="session")
def f25():
    return make_field(5, 2)


@pytest.fixture(scope="session")
def f49():
    return make_field(7, 2)


@pytest.fixture(scope="session")
def sweep_fields():
    return {(p, m): make_field(p, m) for p, m in SWEEP_POINTS}


@pytest.fixture(scope="session")
def full_sweep_report():
    """The default full sweep; shared by the acceptance tests."""
    return run_sweep(SweepSpec())
