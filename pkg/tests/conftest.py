import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from spinorga.algebra import Multivector, Signature, tables

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

CL13 = Signature(1, 3)
CL3 = Signature(3, 0)


def random_mv(rng, sig, scale=1.0, even=False, grade=None):
    c = rng.normal(size=sig.dim) * scale
    g = tables(sig).grades
    if even:
        c[g % 2 == 1] = 0.0
    if grade is not None:
        c[g != grade] = 0.0
    return Multivector(sig, c)


def random_unit_relative_vector(rng):
    """Unit ``e = n^k sigma_k`` in Cl(1,3)."""
    from spinorga.dirac import sigma

    n = rng.normal(size=3)
    n /= np.linalg.norm(n)
    return sigma(1) * n[0] + sigma(2) * n[1] + sigma(3) * n[2]


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


def mv_strategy(sig, even=False, grade=None):
    g = tables(sig).grades

    def build(vals):
        c = np.array(vals)
        if even:
            c[g % 2 == 1] = 0.0
        if grade is not None:
            c[g != grade] = 0.0
        return Multivector(sig, c)

    return st.lists(finite, min_size=sig.dim, max_size=sig.dim).map(build)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
