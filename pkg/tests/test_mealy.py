import pytest

from hypothesis import given, strategies as st

from common.lib.exceptions import InputException
from common.lib.finsets import FinSet, FinFun, pair_index, unpair_index
from common.lib.helpers import get_generator, random_valid_cell
from common.lib.mealy import (Cell, MealyMachine, associator, cell_compose, check_cell, check_pentagon, check_triangle,
							  enumerate_cells, enumerate_machines, extend_actions, extend_words, horizontal_compose,
							  identity_cell, identity_loose, invert_cell, is_identity_loose, left_unitor, loose_compose,
							  right_unitor, run_machine, symmetry_cell, tensor_machines, tight_identity_cell,
							  vertical_compose)

from .strategies import composable, machines, seeds, valid_cells


def words_for(machine, max_length=4):
	return st.lists(st.integers(0, machine.input.size - 1), max_size=max_length)


class TestMachine:
	def test_tables_are_validated(self):
		with pytest.raises(InputException) as error:
			MealyMachine(FinSet(2), FinSet(2), FinSet(2), ((0, 1), (2, 0)), ((0, 0), (0, 0)))

		assert error.value.path == "$.d[1][0]"

	def test_output_bound(self):
		with pytest.raises(InputException) as error:
			MealyMachine(FinSet(1), FinSet(1), FinSet(1), ((0,),), ((1,),))

		assert error.value.path == "$.s[0][0]"

	def test_run(self, absorbing_machine):
		assert run_machine(absorbing_machine, 1, [0, 1]) == ((0, 0), 1)
		assert run_machine(absorbing_machine, 0, [1, 0, 1]) == ((1, 0, 1), 0)
		assert run_machine(absorbing_machine, 0, []) == ((), 0)

	def test_run_bad_state(self, absorbing_machine):
		with pytest.raises(InputException) as error:
			run_machine(absorbing_machine, 2, [0])

		assert error.value.path == "$.state"

	def test_run_bad_letter(self, absorbing_machine):
		with pytest.raises(InputException) as error:
			run_machine(absorbing_machine, 0, [3])

		assert error.value.path == "$.word[0]"

	def test_extend(self, absorbing_machine):
		assert extend_words(absorbing_machine, [1, 0], 1) == (1, (0, 0))
		assert extend_actions(absorbing_machine, [1, 0], 0) == (0, (1, 0))

	def test_extend_needs_endomorphism(self):
		machine = MealyMachine(FinSet(1), FinSet(2), FinSet(1), ((0,),), ((1,),))
		with pytest.raises(InputException) as error:
			extend_actions(machine, [0], 0)

		assert error.value.path == "$.output"

	def test_identity_echoes(self):
		assert run_machine(identity_loose(FinSet(3)), 0, [2, 0, 1]) == ((2, 0, 1), 0)
		assert is_identity_loose(identity_loose(FinSet(3)))

	def test_enumerate_machines(self):
		assert len(list(enumerate_machines(FinSet(1), FinSet(1), 1))) == 2
		assert len(list(enumerate_machines(FinSet(1), FinSet(1), 1, min_states=1))) == 1
		assert len(list(enumerate_machines(FinSet(2), FinSet(2), 1, min_states=1))) == 4


class TestComposition:
	@given(composable(2), st.data())
	def test_cascade_runs_as_a_pipeline(self, chain, data):
		first, second = chain
		word = data.draw(words_for(first))
		e1 = data.draw(st.integers(0, first.states.size - 1))
		e2 = data.draw(st.integers(0, second.states.size - 1))

		intermediate, end_first = run_machine(first, e1, word)
		expected, end_second = run_machine(second, e2, intermediate)
		composite = loose_compose(first, second)
		assert run_machine(composite, pair_index(e1, e2, second.states.size), word) == (
			expected, pair_index(end_first, end_second, second.states.size))

	def test_mismatched_alphabets(self, absorbing_machine):
		with pytest.raises(InputException):
			loose_compose(absorbing_machine, identity_loose(FinSet(3)))

	@given(machines(), st.data())
	def test_identity_is_neutral_on_runs(self, machine, data):
		word = data.draw(words_for(machine))
		state = data.draw(st.integers(0, machine.states.size - 1))
		assert run_machine(loose_compose(identity_loose(machine.input), machine), state, word) == run_machine(machine, state, word)
		assert run_machine(loose_compose(machine, identity_loose(machine.output)), state, word) == run_machine(machine, state, word)

	@given(machines(max_size=2), machines(max_size=2), st.data())
	def test_tensor_runs_componentwise(self, first, second, data):
		word_first = data.draw(st.lists(st.integers(0, first.input.size - 1), max_size=3))
		word_second = data.draw(st.lists(st.integers(0, second.input.size - 1), min_size=len(word_first), max_size=len(word_first)))
		output_first, end_first = run_machine(first, 0, word_first)
		output_second, end_second = run_machine(second, 0, word_second)

		word = [pair_index(a1, a2, second.input.size) for a1, a2 in zip(word_first, word_second)]
		output, end = run_machine(tensor_machines(first, second), 0, word)
		assert [unpair_index(b, second.output.size) for b in output] == list(zip(output_first, output_second))
		assert unpair_index(end, second.states.size) == (end_first, end_second)


class TestCells:
	def test_identity_cell(self, absorbing_machine):
		assert check_cell(identity_cell(absorbing_machine))

	def test_swapping_states_breaks_the_output(self, absorbing_machine):
		identity = FinFun.identity(FinSet(2))
		cell = Cell(absorbing_machine, absorbing_machine, identity, identity, FinFun(FinSet(2), FinSet(2), (1, 0)))
		verdict = check_cell(cell)
		assert verdict.law == "cell-s"
		assert (verdict.witness["a"], verdict.witness["e"]) == (1, 0)
		assert (verdict.witness["lhs"], verdict.witness["rhs"]) == (0, 1)

	def test_boundary_mismatch(self, absorbing_machine):
		identity = FinFun.identity(FinSet(2))
		with pytest.raises(InputException) as error:
			Cell(absorbing_machine, absorbing_machine, FinFun.identity(FinSet(3)), identity, identity)

		assert error.value.path == "$.f"

	def test_cells_between_identities(self):
		identity = identity_loose(FinSet(2))
		cells = list(enumerate_cells(identity, identity))
		assert len(cells) == 4
		assert all(cell.f == cell.g for cell in cells)
		assert cells[0] == tight_identity_cell(FinFun(FinSet(2), FinSet(2), (0, 0)))

	@given(valid_cells())
	def test_random_cells_are_valid(self, cell):
		assert check_cell(cell)

	@given(valid_cells())
	def test_identities_are_neutral(self, cell):
		assert vertical_compose(identity_cell(cell.top), cell) == cell
		assert vertical_compose(cell, identity_cell(cell.bottom)) == cell

	@given(valid_cells())
	def test_horizontal_composite_of_cells(self, left):
		right_side = tight_identity_cell(left.g)
		composite = horizontal_compose(left, right_side)
		assert check_cell(composite)
		assert composite.f == left.f and composite.g == left.g

	def test_tight_identity_cells_compose(self):
		f = FinFun(FinSet(2), FinSet(3), (2, 0))
		g = FinFun(FinSet(3), FinSet(1), (0, 0, 0))
		assert vertical_compose(tight_identity_cell(f), tight_identity_cell(g)) == tight_identity_cell(g.after(f))

	def test_unknown_direction(self, absorbing_machine):
		cell = identity_cell(absorbing_machine)
		with pytest.raises(InputException):
			cell_compose("diagonal", cell, cell)

	def test_horizontal_mismatch(self, absorbing_machine):
		cell = identity_cell(absorbing_machine)
		other = tight_identity_cell(FinFun(FinSet(2), FinSet(2), (1, 0)))
		with pytest.raises(InputException):
			horizontal_compose(cell, other)

	def test_vertical_mismatch(self, absorbing_machine):
		with pytest.raises(InputException):
			vertical_compose(identity_cell(absorbing_machine), identity_cell(identity_loose(FinSet(2))))

	def test_invert(self, absorbing_machine):
		cell = identity_cell(absorbing_machine)
		assert invert_cell(cell) == cell

		with pytest.raises(InputException) as error:
			invert_cell(tight_identity_cell(FinFun(FinSet(2), FinSet(2), (0, 0))))

		assert error.value.path == "$.f"


class TestCoherence:
	@given(composable(3))
	def test_associator_is_an_invertible_cell(self, chain):
		cell = associator(*chain)
		assert check_cell(cell)
		assert check_cell(invert_cell(cell))

	@given(machines())
	def test_unitors(self, machine):
		assert check_cell(left_unitor(machine))
		assert check_cell(right_unitor(machine))
		assert check_cell(invert_cell(left_unitor(machine)))

	@given(composable(4, max_size=2))
	def test_pentagon(self, chain):
		assert check_pentagon(*chain)

	@given(composable(2))
	def test_triangle(self, chain):
		assert check_triangle(*chain)

	@given(machines(), machines())
	def test_symmetry(self, first, second):
		cell = symmetry_cell(first, second)
		assert check_cell(cell)
		assert vertical_compose(cell, symmetry_cell(second, first)) == identity_cell(tensor_machines(first, second))

	@given(seeds)
	def test_seeds_are_reproducible(self, seed):
		assert random_valid_cell(get_generator(seed)) == random_valid_cell(get_generator(seed))
