import math

import pytest

import cki
from cki import precision as prec


@pytest.fixture(autouse=True)
def standard_precision():
    """Every test starts and ends in standard precision."""
    prec.set_precision(prec.STANDARD)
    yield
    prec.set_precision(prec.STANDARD)


@pytest.fixture(scope="session")
def gaussian():
    return cki.gaussian()


def brute_moment(k, radius=40):
    """Direct moment oracle: plain two-sided summation at a fixed radius."""
    terms = []
    for j in range(-radius, radius + 1):
        terms.append(float(j) ** k * math.exp(-j * j / 2) / math.sqrt(2 * math.pi))
    return math.fsum(terms)


def brute_tail(degree, radius, extent=400):
    """Direct tail oracle: sum |j|**degree psi(j) over radius < |j| <= extent."""
    terms = []
    for j in range(radius + 1, extent + 1):
        terms.append(2 * float(j) ** degree * math.exp(-j * j / 2) / math.sqrt(2 * math.pi))
    return math.fsum(terms)
