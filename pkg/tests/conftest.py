import pytest
from hypothesis import HealthCheck, settings

from engelcheck.claims import DEFAULT_SPEC
from engelcheck.parse import load_presentation
from engelcheck.quotient import build_quotient

# property tests are derandomized so every run explores the same examples
settings.register_profile("repo", derandomize=True, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


@pytest.fixture(scope="session")
def spec():
    return load_presentation(DEFAULT_SPEC)


@pytest.fixture(scope="session")
def B(spec):
    return build_quotient(spec)


@pytest.fixture(scope="session")
def C(spec):
    return build_quotient(spec.monomial_part())


@pytest.fixture(scope="session")
def B5(spec):
    return build_quotient(spec, characteristic=5)


@pytest.fixture(scope="session")
def B7(spec):
    return build_quotient(spec, characteristic=7)
