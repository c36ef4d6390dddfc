import itertools

import pytest

from hypothesis import given, strategies as st

from common.lib.exceptions import InputException
from common.lib.finsets import FinSet
from common.lib.monoids import (BicrossedElement, FinMonoid, MatchedPair, MonoidAction, as_word, bicrossed_cayley,
								bicrossed_cospan_relations, bicrossed_multiply, bicrossed_unit, check_action_laws,
								check_bicrossed_equations, check_bicrossed_product, check_monoid_laws, extend_tables, words)


def trivial_pair(monoid, alphabet_size):
	"""
	Both actions trivial: d(a, e) = e and s(a, e) = a
	"""
	states = monoid.carrier.size
	return MatchedPair(monoid, FinSet(alphabet_size), tuple(tuple(range(states)) for _ in range(alphabet_size)),
					   tuple((a,) * states for a in range(alphabet_size)))


def brute_force_is_monoid(size, unit, mult):
	for x, y, z in itertools.product(range(size), repeat=3):
		if mult[mult[x][y]][z] != mult[x][mult[y][z]]:
			return False

	return all(mult[unit][x] == x and mult[x][unit] == x for x in range(size))


class TestMonoidLaws:
	def test_cyclic_group(self):
		assert check_monoid_laws(FinMonoid.cyclic(2))
		assert check_monoid_laws(FinMonoid.cyclic(5))

	def test_singleton(self):
		assert check_monoid_laws(FinMonoid.trivial())

	def test_first_associativity_violation(self):
		mult = [list(row) for row in FinMonoid.cyclic(3).mult]
		mult[1][1] = 1
		verdict = check_monoid_laws(FinMonoid(FinSet(3), 0, mult))
		assert not verdict
		assert verdict.law == "associativity"
		assert verdict.witness["triple"] == [1, 1, 2]
		assert (verdict.witness["lhs"], verdict.witness["rhs"]) == (0, 1)

	def test_right_unit_violation(self):
		verdict = check_monoid_laws(FinMonoid(FinSet(2), 0, ((0, 1), (0, 1))))
		assert verdict.law == "right-unit"
		assert verdict.witness["element"] == 1

	def test_empty_carrier(self):
		with pytest.raises(InputException):
			FinMonoid(FinSet(0), 0, ())

	@pytest.mark.slow
	def test_agrees_with_brute_force(self):
		for size in range(1, 4):
			for unit in range(size):
				for flat in itertools.product(range(size), repeat=size * size):
					mult = tuple(flat[row * size:(row + 1) * size] for row in range(size))
					expected = brute_force_is_monoid(size, unit, mult)
					assert bool(check_monoid_laws(FinMonoid(FinSet(size), unit, mult))) == expected

	def test_power(self):
		assert FinMonoid.cyclic(3).power(1, 4) == 1
		assert FinMonoid.cyclic(3).power(2, 0) == 0


class TestActions:
	def test_trivial_action(self):
		monoid = FinMonoid.cyclic(3)
		assert check_action_laws(MonoidAction(monoid, FinSet(2), ((0, 1),) * 3))

	def test_translation(self):
		monoid = FinMonoid.cyclic(2)
		assert check_action_laws(MonoidAction(monoid, FinSet(2), monoid.mult))
		assert check_action_laws(MonoidAction(monoid, FinSet(2), monoid.mult, side="right"))

	def test_unit_row_not_identity(self):
		verdict = check_action_laws(MonoidAction(FinMonoid.cyclic(2), FinSet(2), ((1, 0), (1, 0))))
		assert verdict.law == "action-unit"

	def test_side(self):
		with pytest.raises(InputException):
			MonoidAction(FinMonoid.trivial(), FinSet(1), ((0,),), side="middle")


class TestWords:
	def test_shortlex(self):
		assert list(words(2, 2)) == [(), (0,), (1,), (0, 0), (0, 1), (1, 0), (1, 1)]
		assert list(words(2, 2, min_length=2)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
		assert list(words(0, 3)) == [()]

	def test_bad_letter(self):
		with pytest.raises(InputException) as error:
			as_word([0, 2], 2, "$.w")

		assert error.value.path == "$.w[1]"

	def test_head_letter_acts_last(self):
		# d(0, e) = 1 - e, d(1, e) = 0
		d = ((1, 0), (0, 0))
		s = ((0, 0), (1, 1))
		assert extend_tables(d, s, (0, 1), 0) == (1, (0, 1))
		assert extend_tables(d, s, (1, 0), 0) == (0, (1, 0))
		assert extend_tables(d, s, (), 1) == (1, ())


class TestMatchedPair:
	def test_trivial_actions(self):
		assert check_bicrossed_equations(trivial_pair(FinMonoid.cyclic(2), 2), 3)

	def test_absorbing_pair(self, absorbing_pair):
		verdict = check_bicrossed_equations(absorbing_pair, 4)
		assert verdict
		assert verdict.detail == {"bound": 4}

	def test_mutated_absorbing_pair(self, absorbing_pair):
		pair = MatchedPair(absorbing_pair.monoid, absorbing_pair.alphabet, absorbing_pair.d, ((0, 1), (1, 0)))
		verdict = check_bicrossed_equations(pair, 4)
		assert verdict.law == "translate-action"
		assert verdict.witness["word"] == (0,)
		assert (verdict.witness["e"], verdict.witness["e_prime"]) == (1, 1)
		assert verdict.witness["lhs"] == (1,)
		assert verdict.witness["rhs"] == (0,)

	def test_unit_must_be_fixed(self):
		pair = MatchedPair(FinMonoid.cyclic(2), FinSet(1), ((1, 0),), ((0, 0),))
		assert check_bicrossed_equations(pair, 2).law == "unit-fixpoint-d"

	def test_single_letter_extends_s(self, absorbing_pair):
		for a in absorbing_pair.alphabet:
			for e in absorbing_pair.monoid.carrier:
				assert absorbing_pair.translate((a,), e) == (absorbing_pair.s[a][e],)
				assert absorbing_pair.act((a,), e) == absorbing_pair.d[a][e]

	@given(st.lists(st.integers(0, 1), max_size=3), st.lists(st.integers(0, 1), max_size=3), st.integers(0, 1))
	def test_word_action_law(self, first, second, state):
		pair = MatchedPair(FinMonoid.cyclic(2), FinSet(2), ((1, 0), (0, 1)), ((0, 1), (1, 1)))
		first, second = tuple(first), tuple(second)
		assert pair.act(first + second, state) == pair.act(first, pair.act(second, state))

	def test_bad_table(self):
		with pytest.raises(InputException) as error:
			MatchedPair(FinMonoid.cyclic(2), FinSet(1), ((0, 2),), ((0, 0),))

		assert error.value.path == "$.d[0][1]"


class TestBicrossedProduct:
	def test_unit_on_the_left(self, absorbing_pair):
		y = BicrossedElement(1, (1, 0))
		assert bicrossed_multiply(bicrossed_unit(absorbing_pair), y, absorbing_pair) == y

	def test_trivial_actions_give_direct_product(self):
		pair = trivial_pair(FinMonoid.cyclic(3), 2)
		product = bicrossed_multiply(BicrossedElement(2, (0, 1)), BicrossedElement(2, (1,)), pair)
		assert product == BicrossedElement(1, (0, 1, 1))

	def test_absorbing(self, absorbing_pair):
		product = bicrossed_multiply(BicrossedElement(1, (1,)), BicrossedElement(1, ()), absorbing_pair)
		assert product == BicrossedElement(1, (0,))

	def test_letter_out_of_range(self, absorbing_pair):
		with pytest.raises(InputException) as error:
			bicrossed_multiply(BicrossedElement(0, (2,)), BicrossedElement(0, ()), absorbing_pair)

		assert error.value.path == "$.left.w[0]"

	def test_product_laws(self, absorbing_pair):
		assert check_bicrossed_product(absorbing_pair, 3)
		assert check_bicrossed_product(trivial_pair(FinMonoid.cyclic(2), 2), 3)

	def test_cospan_relations(self, absorbing_pair):
		assert bicrossed_cospan_relations(absorbing_pair, 3)
		assert bicrossed_cospan_relations(trivial_pair(FinMonoid.cyclic(2), 2), 3)

	def test_cospan_word_then_state(self, absorbing_pair):
		product = bicrossed_multiply(BicrossedElement(0, (1,)), BicrossedElement(1, ()), absorbing_pair)
		assert product == BicrossedElement(1, (0,))

	def test_cayley_fragment(self):
		elements, table = bicrossed_cayley(trivial_pair(FinMonoid.trivial(), 1), 1)
		assert elements == [BicrossedElement(0, ()), BicrossedElement(0, (0,))]
		assert table.tolist() == [[0, 1], [1, -1]]
