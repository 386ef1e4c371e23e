import pytest

from eqschubert import _backend


@pytest.fixture(params=_backend.available())
def backend(request):
    prev = _backend.current()
    _backend.set_backend(request.param)
    yield request.param
    _backend.set_backend(prev)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
