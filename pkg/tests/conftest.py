import pytest

from .helpers import (
    boolean_arrangement,
    figure_arrangement,
    running_example,
)


@pytest.fixture
def running_arrangement():
    return running_example()


@pytest.fixture
def running_structure(running_arrangement):
    from toricmorse.toric.faces import ToricFaceStructure

    return ToricFaceStructure(running_arrangement)


@pytest.fixture
def boolean():
    return boolean_arrangement()


@pytest.fixture
def figure():
    return figure_arrangement()


def pytest_addoption(parser):
    parser.addoption(
        "--slow", action="store_true", default=False, help="run slow tests"
    )


def pytest_configure(config):
    def add_mark(name, description):
        config.addinivalue_line("markers", f"{name}: given test {description}")

    add_mark("slow", "runs slowly")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip_slow = pytest.mark.skip(reason="only runs when --slow is set")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
