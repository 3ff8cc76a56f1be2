import os
import sys
from itertools import product

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from polysep import (  # noqa: E402
    Polytope,
    builtin_catalog,
    make_bipyramid,
    make_cross_polytope,
    make_cube,
    make_simplex,
    realize,
)

_CATALOG = None


def catalog():
    """(label, polytope) for every built-in entry, realized once per session."""
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = [(s.label, realize(s)) for s in builtin_catalog()]
    return _CATALOG


@pytest.fixture(scope="session")
def catalog_polytopes():
    return catalog()


@pytest.fixture(scope="session")
def unit_cube():
    return Polytope.from_points(list(product((0, 1), repeat=3)), name="unit cube")


@pytest.fixture(scope="session")
def cube3():
    return make_cube(3)


@pytest.fixture(scope="session")
def cube4():
    return make_cube(4)


@pytest.fixture(scope="session")
def octahedron():
    return make_cross_polytope(3)


@pytest.fixture(scope="session")
def bipyramid():
    return make_bipyramid(make_simplex(2))


@pytest.fixture(scope="session")
def square():
    return make_cube(2)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
