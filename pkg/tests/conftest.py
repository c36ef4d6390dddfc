"""
Shared fixtures
"""
import pytest

from hypothesis import settings, HealthCheck

from common.lib.finsets import FinSet
from common.lib.logger import Logger
from common.lib.mealy import MealyMachine
from common.lib.monads import DoubleMonad
from common.lib.monoids import FinMonoid, MatchedPair

settings.register_profile("mealybench", derandomize=True, max_examples=60, deadline=None,
						  suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("mealybench")


@pytest.fixture
def logger():
	return Logger(output=False)


@pytest.fixture
def absorbing_machine():
	"""
	E = {e0, z}, A = {a0, a1}; d(a, e) = e, s(a, e0) = a, s(a, z) = a0
	"""
	return MealyMachine(FinSet(2), FinSet(2), FinSet(2), ((0, 1), (0, 1)), ((0, 0), (1, 0)))


@pytest.fixture
def absorbing_monoid():
	return FinMonoid(FinSet(2), 0, ((0, 1), (1, 1)))


@pytest.fixture
def absorbing_monad(absorbing_machine, absorbing_monoid):
	return DoubleMonad(absorbing_machine, 0, absorbing_monoid.mult)


@pytest.fixture
def absorbing_pair(absorbing_machine, absorbing_monoid):
	return MatchedPair(absorbing_monoid, FinSet(2), absorbing_machine.d, absorbing_machine.s)


@pytest.fixture
def cyclic_monad():
	"""
	Z/2 acting trivially on both sides of a two-letter alphabet
	"""
	return DoubleMonad.from_monoid(FinSet(2), FinMonoid.cyclic(2))
