import sys
from pathlib import Path

import pytest
from hypothesis import settings

from declat.corpus import CHAIN3, I1_FAILING, NESTED, powerset_family
from declat.decomp_lattice import build_lattice
from declat.instances import star, to_family

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def chain3():
    return to_family(CHAIN3)


@pytest.fixture
def nested():
    return to_family(NESTED)


@pytest.fixture
def powerset3():
    return to_family(powerset_family(3))


@pytest.fixture
def i1_failing():
    return to_family(I1_FAILING)


@pytest.fixture
def star3():
    return to_family(star(3))


@pytest.fixture
def b2(chain3):
    return build_lattice(chain3).lattice


@pytest.fixture
def chain_of_3(nested):
    return build_lattice(nested).lattice


@pytest.fixture
def part3(powerset3):
    return build_lattice(powerset3).lattice



def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
