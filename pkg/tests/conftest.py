import random

import pytest

from cwl_degen import Ideal, MonomialIdeal, RingContext, parse_input
from cwl_degen.core import MonomialOrder

# 2-minors of the symmetric matrix [[a,b,c],[b,d,e],[c,e,f]]
VERONESE_TEXT = """\
ring 101 [a,b,c,d,e,f] grevlex
I = a*d - b^2, a*e - b*c, a*f - c^2, b*e - c*d, b*f - c*e, d*f - e^2
"""

# 2-minors of the generic 2x3 matrix [[x1,x2,x3],[y1,y2,y3]]
MINORS_TEXT = """\
ring 101 [x1,x2,x3,y1,y2,y3] grevlex
I = x1*y2 - x2*y1, x1*y3 - x3*y1, x2*y3 - x3*y2
"""


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=0, help="seed for randomized corpora")


@pytest.fixture(scope="session")
def seed(request):
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed):
    return random.Random(seed)


def load(text, name="I"):
    ring, ideals = parse_input(text)
    return Ideal(ring, ideals[name])


@pytest.fixture(scope="session")
def veronese():
    return load(VERONESE_TEXT)


@pytest.fixture(scope="session")
def veronese_initial(veronese):
    return Ideal.from_monomials(veronese.initial())


@pytest.fixture(scope="session")
def minors():
    return load(MINORS_TEXT)


def ring(names="xy", order="grevlex", p=101):
    return RingContext(p, tuple(names), MonomialOrder(order))


def mono_ideal(R, *exps):
    return MonomialIdeal(R, [tuple(e) for e in exps])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
