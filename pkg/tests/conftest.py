import numpy as np
import pytest
from hypothesis import settings, strategies as st

from pauligl import CoefficientTensor

settings.register_profile("repo", deadline=None)
settings.load_profile("repo")

# bounded magnitudes keep absolute error tolerances meaningful
complex_coeffs = st.complex_numbers(max_magnitude=10.0,
                                    allow_nan=False, allow_infinity=False)


def multi_indices(m):
    return st.tuples(*([st.integers(0, 3)] * m))


@st.composite
def coefficient_tensors(draw, min_m=1, max_m=3, max_terms=8):
    m = draw(st.integers(min_m, max_m))
    coeffs = draw(st.dictionaries(multi_indices(m), complex_coeffs,
                                  max_size=max_terms))
    return CoefficientTensor(m, coeffs, tol=0.0)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def random_complex_matrix(rng, n):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


# The acceptance tests record one verdict line apiece; echo them in a block
# at the end of the run so they survive pytest's output capture.
_acceptance_verdicts = []


def record_verdict(line):
    _acceptance_verdicts.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _acceptance_verdicts:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_verdicts:
            terminalreporter.write_line(line)
