import itertools
import json

import pytest

from pathlib import Path

from hypothesis import given

from common.lib.documents import dump_report, to_document
from common.lib.exceptions import BudgetExceededException, InputException, ViolationException
from common.lib.finsets import FinSet, FinFun
from common.lib.mealy import MealyMachine, check_cell, enumerate_machines, identity_cell, identity_loose
from common.lib.monads import (BicrossedRepresentation, DoubleMonad, FreeMonadConfig, LooseMonadMap, ModuleStructure,
							   TightMonadMorphism, action_to_module, check_free_extension_unique, check_loose_monad_map,
							   check_matching_relation, check_module, check_monad, check_tight_monad_morphism,
							   derive_matched_pair, enumerate_monads, estimate_monad_space, free_monad, free_monad_extend,
							   free_monad_law_search, induced_bicrossed_hom, lambda_cell, module_action_convert,
							   module_cell, module_to_action, multiplication_cell, regular_module, unit_cell)
from common.lib.monoids import FinMonoid

from .strategies import endomachines

DOCS = Path(__file__).parent.parent / "docs"

# d(a, e) = a and s(a, e) = 1 - a
FLIPPER = MealyMachine(FinSet(2), FinSet(2), FinSet(2), ((0, 0), (1, 1)), ((1, 1), (0, 0)))


def identity_map(monad):
	"""
	The loose map i_A from a monad to itself
	"""
	return LooseMonadMap(identity_loose(monad.alphabet), tuple((0,) for _ in monad.states), tuple((e,) for e in monad.states))


class TestMonad:
	def test_absorbing_monad(self, absorbing_monad):
		assert check_monad(absorbing_monad)

	def test_missing_right_unit(self, absorbing_machine):
		verdict = check_monad(DoubleMonad(absorbing_machine, 0, ((0, 1), (0, 1))))
		assert verdict.law == "ma_2"
		assert verdict.witness["element"] == 1

	def test_output_not_fixed_by_unit(self):
		machine = MealyMachine(FinSet(2), FinSet(2), FinSet(1), ((0,), (0,)), ((1,), (0,)))
		verdict = check_monad(DoubleMonad(machine, 0, ((0,),)))
		assert verdict.law == "ac_1"
		assert verdict.witness["a"] == 0

	def test_trivial_and_cyclic(self, cyclic_monad):
		assert check_monad(DoubleMonad.trivial(FinSet(3)))
		assert check_monad(cyclic_monad)
		assert cyclic_monad.monoid == FinMonoid.cyclic(2)

	def test_needs_endomorphism(self):
		machine = MealyMachine(FinSet(1), FinSet(2), FinSet(1), ((0,),), ((0,),))
		with pytest.raises(InputException) as error:
			DoubleMonad(machine, 0, ((0,),))

		assert error.value.path == "$.machine.output"

	def test_unit_must_be_a_state(self, absorbing_machine):
		with pytest.raises(InputException) as error:
			DoubleMonad(absorbing_machine, 2, ((0, 1), (1, 1)))

		assert error.value.path == "$.e0"

	def test_structure_cells(self, absorbing_monad, cyclic_monad):
		for monad in (absorbing_monad, cyclic_monad):
			assert check_cell(unit_cell(monad))
			assert check_cell(multiplication_cell(monad))

	def test_matched_pair(self, absorbing_monad, absorbing_pair):
		assert derive_matched_pair(absorbing_monad) == absorbing_pair

	def test_matched_pair_of_non_monad(self, absorbing_machine):
		with pytest.raises(InputException):
			derive_matched_pair(DoubleMonad(absorbing_machine, 0, ((0, 1), (0, 1))))


class TestEnumeration:
	@pytest.mark.parametrize("sizes,expected", [((1, 1), 1), ((2, 1), 1), ((2, 2), 32)])
	def test_counts(self, sizes, expected):
		assert len(enumerate_monads(*sizes)) == expected

	def test_all_are_monads_in_order(self):
		monads = enumerate_monads(2, 2)
		assert all(check_monad(monad) for monad in monads)
		keys = [(monad.d, monad.s, monad.e0, monad.mu) for monad in monads]
		assert keys == sorted(keys)
		assert len(set(keys)) == len(keys)

	@pytest.mark.slow
	def test_count_agrees_with_brute_force(self):
		def square(flat):
			return (flat[:2], flat[2:])

		tables = list(itertools.product(range(2), repeat=4))
		found = 0
		for d, s, mu in itertools.product(tables, repeat=3):
			machine = MealyMachine(FinSet(2), FinSet(2), FinSet(2), square(d), square(s))
			found += sum(1 for e0 in range(2) if check_monad(DoubleMonad(machine, e0, square(mu))))

		assert found == len(enumerate_monads(2, 2)) == 32

	def test_committed_counts(self):
		committed = json.loads((DOCS / "monad-counts.json").read_text(encoding="utf-8"))
		assert [(entry["alphabet"], entry["states"]) for entry in committed] == [(1, 1), (1, 2), (2, 1), (2, 2)]
		for entry in committed:
			assert len(enumerate_monads(entry["alphabet"], entry["states"])) == entry["count"]

	def test_estimate(self):
		assert estimate_monad_space(2, 3) == 315171

	def test_budget(self):
		with pytest.raises(BudgetExceededException) as error:
			enumerate_monads(3, 3, budget=10 ** 7)

		assert error.value.estimate > 10 ** 7

	def test_sizes_must_be_positive(self):
		with pytest.raises(InputException):
			enumerate_monads(0, 1)


class TestFreeMonad:
	def test_default_reading_is_a_monad(self):
		free = free_monad(FLIPPER, FreeMonadConfig(bound=2))
		assert free.verdict
		assert len(free.words) == 7
		assert check_cell(free.unit)

	def test_literal_reading_breaks_transition_law(self):
		free = free_monad(FLIPPER, FreeMonadConfig(bound=2))
		literal = free.discrepancy["literal"]
		assert not literal["verdict"]["pass"]
		assert literal["verdict"]["witness"]["axiom"] == "mc_2"
		assert free.discrepancy["difference_count"] > 0
		assert free.discrepancy["first_difference"]["table"] == "d"

	@given(endomachines())
	def test_default_reading_always_passes(self, machine):
		assert free_monad(machine, FreeMonadConfig(bound=2)).verdict

	def test_law_search_covers_all_readings(self):
		results = free_monad_law_search(FLIPPER, bound=2)
		assert len(results) == 8
		assert dict((cfg, bool(verdict)) for cfg, verdict in results)[FreeMonadConfig(bound=2)]

	def test_committed_discrepancy_report(self):
		committed = [json.loads(line) for line in (DOCS / "free-monad-discrepancies.jsonl").read_text(encoding="utf-8").splitlines() if line]
		generated = []
		for size in (1, 2):
			alphabet = FinSet(size)
			for machine in enumerate_machines(alphabet, alphabet, 2, min_states=1):
				report = {"machine": to_document(machine), **free_monad(machine, FreeMonadConfig(bound=2)).discrepancy}
				generated.append(json.loads(dump_report(report)))

		assert generated == committed
		assert sum(1 for report in committed if report["difference_count"]) == 180
		assert all(report["configured"]["verdict"] == {"pass": True} for report in committed)

	def test_bound(self):
		with pytest.raises(InputException) as error:
			free_monad(FLIPPER, FreeMonadConfig(bound=0))

		assert error.value.path == "$.bound"

	def test_threading(self):
		with pytest.raises(InputException) as error:
			FreeMonadConfig(d_threading="sideways")

		assert error.value.path == "$.d_threading"


class TestFreeExtension:
	def test_sum_modulo_two(self, cyclic_monad):
		machine = cyclic_monad.machine
		extension = free_monad_extend(machine, identity_cell(machine), cyclic_monad, FreeMonadConfig(bound=2))
		assert extension.verdict
		assert extension.morphism.alpha.table == (0, 0, 1, 0, 1, 1, 0)

	def test_unique(self, cyclic_monad):
		machine = cyclic_monad.machine
		verdict = check_free_extension_unique(machine, identity_cell(machine), cyclic_monad, FreeMonadConfig(bound=2))
		assert verdict
		assert verdict.detail == {"extensions": 1}

	def test_cell_must_land_in_the_target(self, cyclic_monad, absorbing_machine):
		with pytest.raises(InputException) as error:
			free_monad_extend(absorbing_machine, identity_cell(absorbing_machine), cyclic_monad)

		assert error.value.path == "$.gamma"


class TestTightMorphisms:
	def test_collapse_to_trivial(self, cyclic_monad):
		morphism = TightMonadMorphism(FinFun.identity(FinSet(2)), FinFun.constant(FinSet(2), FinSet(1), 0))
		assert check_tight_monad_morphism(cyclic_monad, DoubleMonad.trivial(FinSet(2)), morphism)

	def test_absorbing_does_not_collapse(self, absorbing_monad):
		morphism = TightMonadMorphism(FinFun.identity(FinSet(2)), FinFun.constant(FinSet(2), FinSet(1), 0))
		verdict = check_tight_monad_morphism(absorbing_monad, DoubleMonad.trivial(FinSet(2)), morphism)
		assert verdict.law == "cell-s"
		assert (verdict.witness["a"], verdict.witness["e"]) == (1, 1)

	def test_identity(self, absorbing_monad):
		identity = FinFun.identity(FinSet(2))
		assert check_tight_monad_morphism(absorbing_monad, absorbing_monad, TightMonadMorphism(identity, identity))

	def test_unit_not_preserved(self, absorbing_monad):
		morphism = TightMonadMorphism(FinFun.identity(FinSet(2)), FinFun.constant(FinSet(2), FinSet(2), 1))
		assert check_tight_monad_morphism(absorbing_monad, absorbing_monad, morphism).law == "unit"

	def test_boundary(self, absorbing_monad):
		morphism = TightMonadMorphism(FinFun.identity(FinSet(2)), FinFun.identity(FinSet(3)))
		with pytest.raises(InputException) as error:
			check_tight_monad_morphism(absorbing_monad, absorbing_monad, morphism)

		assert error.value.path == "$.alpha.dom"

	def test_induced_hom(self, cyclic_monad):
		morphism = TightMonadMorphism(FinFun.identity(FinSet(2)), FinFun.constant(FinSet(2), FinSet(1), 0))
		table, verdict = induced_bicrossed_hom(cyclic_monad, DoubleMonad.trivial(FinSet(2)), morphism, bound=2)
		assert verdict
		assert len(table) == 14
		assert table[3] == [[0, [0, 0]], [0, [0, 0]]]

	def test_induced_hom_needs_a_morphism(self, absorbing_monad):
		morphism = TightMonadMorphism(FinFun.identity(FinSet(2)), FinFun.constant(FinSet(2), FinSet(1), 0))
		with pytest.raises(ViolationException):
			induced_bicrossed_hom(absorbing_monad, DoubleMonad.trivial(FinSet(2)), morphism)


class TestModules:
	def test_regular_module(self, absorbing_monad, cyclic_monad):
		for monad in (absorbing_monad, cyclic_monad):
			module = regular_module(monad)
			assert check_module(module)
			assert check_cell(module_cell(module))

	def test_unit_must_act_trivially(self, absorbing_monad, absorbing_machine):
		verdict = check_module(ModuleStructure(absorbing_monad, absorbing_machine, ((1, 0), (1, 1))))
		assert verdict.law == "ax_3"
		assert (verdict.witness["p"], verdict.witness["lhs"]) == (0, 1)

	def test_action_table_shape(self, absorbing_monad, absorbing_machine):
		with pytest.raises(InputException) as error:
			ModuleStructure(absorbing_monad, absorbing_machine, ((0, 1),))

		assert error.value.path == "$.xi"

	def test_round_trip_through_representation(self, absorbing_monad):
		module = regular_module(absorbing_monad)
		representation = module_action_convert("to-action", module)
		assert representation.alpha == absorbing_monad.mu
		assert representation.beta == absorbing_monad.d

		rebuilt = module_action_convert("to-module", (absorbing_monad, representation, FinSet(2), absorbing_monad.s))
		assert rebuilt == module

	def test_unbalanced_output(self, absorbing_monad):
		representation = module_to_action(regular_module(absorbing_monad))
		with pytest.raises(ViolationException) as error:
			action_to_module(absorbing_monad, representation, FinSet(2), ((0, 1), (0, 1)))

		assert error.value.verdict.law == "ax_1"

	def test_unknown_direction(self, absorbing_monad):
		with pytest.raises(InputException):
			module_action_convert("sideways", regular_module(absorbing_monad))


class TestMatchingRelation:
	def test_regular_representation(self, absorbing_monad):
		representation = BicrossedRepresentation(FinSet(2), absorbing_monad.mu, absorbing_monad.d)
		verdict = check_matching_relation(absorbing_monad, representation)
		assert verdict
		assert verdict.detail == {"bound": 4}

	def test_alpha_must_be_an_action(self, absorbing_monad):
		representation = BicrossedRepresentation(FinSet(2), ((0, 1), (1, 0)), absorbing_monad.d)
		verdict = check_matching_relation(absorbing_monad, representation)
		assert verdict.law == "alpha-action"
		assert (verdict.witness["e"], verdict.witness["e_prime"], verdict.witness["x"]) == (1, 1, 0)

	def test_constant_beta(self, absorbing_monad):
		representation = BicrossedRepresentation(FinSet(2), absorbing_monad.mu, ((0, 0), (0, 0)))
		verdict = check_matching_relation(absorbing_monad, representation)
		assert verdict.law == "matching"
		assert verdict.witness["word"] == (0,)
		assert (verdict.witness["h"], verdict.witness["x"]) == (1, 0)
		assert (verdict.witness["lhs"], verdict.witness["rhs"]) == (0, 1)

	def test_row_count(self, absorbing_monad):
		representation = BicrossedRepresentation(FinSet(2), ((0, 1),), absorbing_monad.d)
		with pytest.raises(InputException) as error:
			check_matching_relation(absorbing_monad, representation)

		assert error.value.path == "$.alpha"


class TestLooseMaps:
	def test_identity_map(self, absorbing_monad, cyclic_monad):
		for monad in (absorbing_monad, cyclic_monad):
			loose = identity_map(monad)
			assert check_loose_monad_map(monad, monad, loose)
			assert check_cell(lambda_cell(monad, monad, loose))

	def test_units(self, absorbing_monad):
		loose = LooseMonadMap(identity_loose(FinSet(2)), ((0,), (0,)), ((1,), (1,)))
		verdict = check_loose_monad_map(absorbing_monad, absorbing_monad, loose)
		assert verdict.law == "dl_2"
		assert verdict.witness["equation"] == "sigma"

	def test_constant_sigma_breaks_the_cell(self, absorbing_monad):
		loose = LooseMonadMap(identity_loose(FinSet(2)), ((0,), (0,)), ((0,), (0,)))
		assert check_loose_monad_map(absorbing_monad, absorbing_monad, loose, fugality_only=True)

		verdict = check_loose_monad_map(absorbing_monad, absorbing_monad, loose)
		assert verdict.law == "dl_1"
		assert verdict.witness["equation"] == "output"
		assert (verdict.witness["a"], verdict.witness["e"]) == (1, 1)

	def test_fugality(self, absorbing_monad, cyclic_monad):
		loose = identity_map(absorbing_monad)
		verdict = check_loose_monad_map(absorbing_monad, cyclic_monad, loose, fugality_only=True)
		assert verdict.law == "dl_3.2"
		assert (verdict.witness["e"], verdict.witness["e_prime"], verdict.witness["x"]) == (1, 1, 0)
		assert (verdict.witness["lhs"], verdict.witness["rhs"]) == (1, 0)

	def test_sigma_must_hit_target_states(self, absorbing_monad):
		loose = LooseMonadMap(identity_loose(FinSet(2)), ((0,), (0,)), ((2,), (1,)))
		with pytest.raises(InputException) as error:
			check_loose_monad_map(absorbing_monad, absorbing_monad, loose)

		assert error.value.path == "$.sigma[0][0]"

	def test_negative_sigma(self):
		with pytest.raises(InputException) as error:
			LooseMonadMap(identity_loose(FinSet(2)), ((0,), (0,)), ((0,), (-1,)))

		assert error.value.path == "$.sigma[1][0]"
