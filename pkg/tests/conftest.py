import pytest

from ilpalloc.model import Instance


@pytest.fixture
def pigeonhole():
    return Instance.from_lists([(3, 1), (3, 1)], [(4, 4, 1), (4, 4, 1)])


@pytest.fixture
def one_by_one():
    return Instance.from_lists([(3, 1)], [(4, 8)])


def pytest_configure(config):
    config.acceptance_lines = []


def pytest_terminal_summary(terminalreporter, config):
    if config.acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in config.acceptance_lines:
            terminalreporter.write_line(line)
