from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings

from allocgrid.schemas import Allocation, ProblemInstance

# exact arithmetic makes individual examples slow; timing is not under test
hypothesis_settings.register_profile(
    "allocgrid", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
hypothesis_settings.load_profile("allocgrid")


@pytest.fixture
def counterexample_instance() -> ProblemInstance:
    return ProblemInstance(n=5, p=Fraction(2, 3), T=Fraction(7, 3))


@pytest.fixture
def counterexample_allocation() -> Allocation:
    third = Fraction(1, 3)
    return Allocation(amounts=[2 * third, 2 * third, third, third, third])
