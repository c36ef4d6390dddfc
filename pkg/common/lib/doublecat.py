"""
Universal constructions in the double category of Mealy machines

Companions, conjoints, cotabulators, the terminal object, double pullbacks,
the interchange law and loose adjunctions, plus the bounded searches that
refute initial objects and tabulators.
"""
import itertools

from typing import NamedTuple

import config

from common.lib.exceptions import InputException, ConstructionException, ViolationException, BudgetExceededException
from common.lib.finsets import FinSet, FinFun, all_functions, bang, coequalizer, coproduct, product, pullback, terminal
from common.lib.mealy import (Cell, MealyMachine, check_cell, compare_cells, enumerate_cells, enumerate_machines,
							  horizontal_compose, identity_cell, identity_loose, invert_cell, is_identity_loose,
							  left_unitor, loose_compose, right_unitor, associator, tight_identity_cell,
							  vertical_chain, vertical_compose)
from common.lib.verdict import Verdict


class Companion(NamedTuple):
	machine: MealyMachine
	epsilon: Cell
	eta: Cell


class Conjoint(NamedTuple):
	machine: MealyMachine
	epsilon: Cell
	eta: Cell


class Cotabulator(NamedTuple):
	carrier: FinSet
	tau: Cell
	factorization: FinFun


class DoublePullback(NamedTuple):
	carrier: FinSet
	projection_first: Cell
	projection_second: Cell
	mediating: Cell
	pairs: tuple


class LooseAdjunction(NamedTuple):
	left: MealyMachine
	right: MealyMachine
	eta: Cell
	epsilon: Cell


class SearchReport(NamedTuple):
	"""
	Outcome of a bounded search

	`refutations` lists the candidates (or candidate families) ruled out,
	each with the witness that rules it out; `survivors` lists whatever was
	not ruled out within the bound.
	"""
	bound: dict
	refutations: list
	survivors: list


def _point(carrier, element):
	"""
	The function from the singleton picking an element
	"""
	return FinFun(FinSet.singleton(), carrier, (element,))


def single_state_machine(input, output, outputs):
	"""
	Machine with a single state, emitting outputs[a] on letter a

	:param FinSet input:
	:param FinSet output:
	:param outputs:  Output letter per input letter
	:return MealyMachine:
	"""
	return MealyMachine(input, output, FinSet.singleton(), tuple((0,) for _ in input), tuple((b,) for b in outputs))


def check_companion_identities(function, machine, epsilon, eta):
	"""
	Check the companion identities

	Stacking η on ε must give ι_f, and placing them side by side must give
	the identity cell on the machine, up to the unitors.

	:param FinFun function:  Tight f: A → B
	:param MealyMachine machine:  Candidate companion A ⇸ B
	:param Cell epsilon:  Cell from the machine to i_B over (f, id_B)
	:param Cell eta:  Cell from i_A to the machine over (id_A, f)
	:return Verdict:
	"""
	verdict = Verdict.first_failure(
		lambda: check_cell(eta).relabel("companion-unit-cell"),
		lambda: check_cell(epsilon).relabel("companion-counit-cell")
	)
	if not verdict:
		return verdict

	vertical = vertical_compose(eta, epsilon)
	horizontal = vertical_chain(invert_cell(left_unitor(machine)), horizontal_compose(eta, epsilon), right_unitor(machine))

	return Verdict.first_failure(
		lambda: compare_cells("companion-vertical", vertical, tight_identity_cell(function)),
		lambda: compare_cells("companion-horizontal", horizontal, identity_cell(machine))
	)


def companion(function):
	"""
	Companion f_* of a tight function

	f_* has a single state and emits f(a) on every letter a. Both companion
	identities are verified before returning.

	:param FinFun function:  Tight f: A → B
	:return Companion:  The machine with its cells ε and η
	"""
	machine = single_state_machine(function.dom, function.cod, function.table)
	one = FinFun.identity(FinSet.singleton())
	eta = Cell(identity_loose(function.dom), machine, FinFun.identity(function.dom), function, one)
	epsilon = Cell(machine, identity_loose(function.cod), function, FinFun.identity(function.cod), one)

	verdict = check_companion_identities(function, machine, epsilon, eta)
	if not verdict:
		raise ConstructionException("Companion of %s fails %s" % (str(function.table), verdict.law))

	return Companion(machine, epsilon, eta)


def check_conjoint_identities(function, machine, epsilon, eta):
	"""
	Check the conjoint identities

	:param FinFun function:  Tight f: A → B
	:param MealyMachine machine:  Candidate conjoint B ⇸ A
	:param Cell epsilon:  Cell from the machine to i_B over (id_B, f)
	:param Cell eta:  Cell from i_A to the machine over (f, id_A)
	:return Verdict:
	"""
	verdict = Verdict.first_failure(
		lambda: check_cell(eta).relabel("conjoint-unit-cell"),
		lambda: check_cell(epsilon).relabel("conjoint-counit-cell")
	)
	if not verdict:
		return verdict

	vertical = vertical_compose(eta, epsilon)
	horizontal = vertical_chain(invert_cell(right_unitor(machine)), horizontal_compose(epsilon, eta), left_unitor(machine))

	return Verdict.first_failure(
		lambda: compare_cells("conjoint-vertical", vertical, tight_identity_cell(function)),
		lambda: compare_cells("conjoint-horizontal", horizontal, identity_cell(machine))
	)


def conjoint_search(function):
	"""
	Search for a conjoint f^*: B ⇸ A of a tight function

	All single-state machines B ⇸ A are tried, in order of their output
	tables. A conjoint should exist exactly when f is a bijection; the search
	runs regardless and the two answers are compared.

	:param FinFun function:  Tight f: A → B
	:return Conjoint:  The first conjoint found, or None
	"""
	domain, codomain = function.dom, function.cod
	one = FinFun.identity(FinSet.singleton())

	found = None
	for outputs in itertools.product(range(domain.size), repeat=codomain.size):
		machine = single_state_machine(codomain, domain, outputs)
		eta = Cell(identity_loose(domain), machine, function, FinFun.identity(domain), one)
		epsilon = Cell(machine, identity_loose(codomain), FinFun.identity(codomain), function, one)
		if check_conjoint_identities(function, machine, epsilon, eta):
			found = Conjoint(machine, epsilon, eta)
			break

	if (found is not None) != function.is_bijective():
		raise ConstructionException("Conjoint search disagrees with bijectivity of %s" % str(function.table))

	return found


def cotabulator(machine, xi=None):
	"""
	Cotabulator of a machine m: A ⇸ B

	The carrier is the quotient of A + B identifying a with s(a, e) for
	every state e; tau is the universal cell into its identity loose
	morphism. If a cell xi from m into an identity loose morphism i_X is
	given, its factorization h through tau is returned as well.

	:param MealyMachine machine:
	:param Cell xi:  Optional cell to factor
	:return Cotabulator:
	"""
	pairs = product(machine.input, machine.states)
	glued = coproduct(machine.input, machine.output)
	outputs = FinFun(pairs.carrier, machine.output, tuple(machine.s[a][e] for a in machine.input for e in machine.states))

	carrier, quotient, classes = coequalizer(glued.right.after(outputs), glued.left.after(pairs.first))
	tau = Cell(machine, identity_loose(carrier), quotient.after(glued.left), quotient.after(glued.right), bang(machine.states))
	if not check_cell(tau):
		raise ConstructionException("Cotabulator cell is not a valid cell")

	factorization = None
	if xi is not None:
		factorization = _factor_through_cotabulator(machine, xi, tau, carrier, classes)

	return Cotabulator(carrier, tau, factorization)


def _factor_through_cotabulator(machine, xi, tau, carrier, classes):
	"""
	The unique h with xi = tau stacked on ι_h

	:return FinFun:
	"""
	if xi.top != machine:
		raise InputException("Cell to factor must start at the machine", "$.top")

	if not is_identity_loose(xi.bottom):
		raise InputException("Cell to factor must end at an identity loose morphism", "$.bottom")

	verdict = check_cell(xi)
	if not verdict:
		raise ViolationException("Cell to factor is not a valid cell", verdict)

	values = xi.f.table + xi.g.table
	table = []
	for index, members in enumerate(classes):
		images = sorted({values[member] for member in members})
		if len(images) > 1:
			raise ViolationException("Cell does not factor through the cotabulator", Verdict.fail(
				"cotabulator-factorization", class_index=index, members=list(members), images=images))
		table.append(images[0])

	factorization = FinFun(carrier, xi.bottom.input, tuple(table))
	if vertical_compose(tau, tight_identity_cell(factorization)) != xi:
		raise ConstructionException("Factorization does not recompose to the given cell")

	return factorization


def terminal_cell(machine):
	"""
	The unique cell from a machine into i_⊤

	:param MealyMachine machine:
	:return Cell:
	"""
	return Cell(machine, identity_loose(terminal()), bang(machine.input), bang(machine.output), bang(machine.states))


def double_pullback(f, g, witnesses=None):
	"""
	Double pullback of a cospan of tight functions A → X ← B

	The object is the pullback of f and g; the projection cells are the ι
	cells over the two projections. Given witness cells xi_A: u → i_A and
	xi_B: u → i_B with compatible tights, the mediating cell u → i_P is
	returned as well.

	:param FinFun f:
	:param FinFun g:
	:param tuple witnesses:  Optional pair of cells (xi_A, xi_B)
	:return DoublePullback:
	"""
	carrier, first, second, pairs = pullback(f, g)
	projection_first = tight_identity_cell(first)
	projection_second = tight_identity_cell(second)

	mediating = None
	if witnesses is not None:
		mediating = _mediating_cell(f, g, carrier, pairs, projection_first, projection_second, *witnesses)

	return DoublePullback(carrier, projection_first, projection_second, mediating, pairs)


def _mediating_cell(f, g, carrier, pairs, projection_first, projection_second, xi_first, xi_second):
	"""
	The cell ⟨xi_A, xi_B⟩ into the double pullback

	:return Cell:
	"""
	if xi_first.top != xi_second.top:
		raise InputException("Witness cells must share their top machine", "$[1].top")

	for position, (xi, target) in enumerate(((xi_first, f.dom), (xi_second, g.dom))):
		if not is_identity_loose(xi.bottom) or xi.bottom.input != target:
			raise InputException("Witness cell must end at the identity loose morphism on a leg of the cospan", "$[%i].bottom" % position)

		if not check_cell(xi):
			raise InputException("Witness cell is not a valid cell", "$[%i]" % position)

	if f.after(xi_first.f) != g.after(xi_second.f):
		raise InputException("Witness cells are incompatible: f∘a ≠ g∘b", "$[1].f")

	if f.after(xi_first.g) != g.after(xi_second.g):
		raise InputException("Witness cells are incompatible: f∘a′ ≠ g∘b′", "$[1].g")

	index = {pair: position for position, pair in enumerate(pairs)}
	loose = xi_first.top
	left = FinFun(loose.input, carrier, tuple(index[(xi_first.f(x), xi_second.f(x))] for x in loose.input))
	right = FinFun(loose.output, carrier, tuple(index[(xi_first.g(y), xi_second.g(y))] for y in loose.output))
	mediating = Cell(loose, identity_loose(carrier), left, right, bang(loose.states))

	if not check_cell(mediating) or vertical_compose(mediating, projection_first) != xi_first \
			or vertical_compose(mediating, projection_second) != xi_second:
		raise ConstructionException("Mediating cell does not recompose to the witnesses")

	return mediating


def double_product(first, second):
	"""
	Double product, the double pullback over the terminal object

	:param FinSet first:
	:param FinSet second:
	:return DoublePullback:
	"""
	return double_pullback(bang(first), bang(second))


def check_interchange(grid):
	"""
	Check the interchange law on a 2×2 grid of cells

	The grid is given as rows, ((upper_left, upper_right), (lower_left,
	lower_right)). Composing rows first and columns first must give the
	same cell.

	:param grid:
	:return Verdict:
	"""
	if len(grid) != 2 or any(len(row) != 2 for row in grid):
		raise InputException("A grid must have two rows of two cells")

	(upper_left, upper_right), (lower_left, lower_right) = grid
	rows_first = vertical_compose(horizontal_compose(upper_left, upper_right), horizontal_compose(lower_left, lower_right))
	columns_first = horizontal_compose(vertical_compose(upper_left, lower_left), vertical_compose(upper_right, lower_right))

	return compare_cells("interchange", rows_first, columns_first)


def _check_adjunction_boundaries(left, right, eta, epsilon):
	if left.input != right.output or left.output != right.input:
		raise InputException("Machines must run in opposite directions", "$[1]")

	expectations = (
		(eta.top, identity_loose(left.input), "$[2].top"),
		(eta.bottom, loose_compose(left, right), "$[2].bottom"),
		(epsilon.top, loose_compose(right, left), "$[3].top"),
		(epsilon.bottom, identity_loose(left.output), "$[3].bottom")
	)
	for actual, expected, path in expectations:
		if actual != expected:
			raise InputException("Unit or counit cell has the wrong boundary", path)

	for cell, position in ((eta, 2), (epsilon, 3)):
		if cell.f != FinFun.identity(cell.f.dom) or cell.g != FinFun.identity(cell.g.dom):
			raise InputException("Unit and counit cells must have identity tights", "$[%i].f" % position)


def _zigzags(left, right, eta, epsilon):
	"""
	Both zig-zag identities of a loose adjunction

	:return Verdict:
	"""
	verdict = Verdict.first_failure(
		lambda: check_cell(eta).relabel("unit-cell"),
		lambda: check_cell(epsilon).relabel("counit-cell")
	)
	if not verdict:
		return verdict

	zig = vertical_chain(
		invert_cell(left_unitor(left)),
		horizontal_compose(eta, identity_cell(left)),
		associator(left, right, left),
		horizontal_compose(identity_cell(left), epsilon),
		right_unitor(left)
	)
	zag = vertical_chain(
		invert_cell(right_unitor(right)),
		horizontal_compose(identity_cell(right), eta),
		invert_cell(associator(right, left, right)),
		horizontal_compose(epsilon, identity_cell(right)),
		left_unitor(right)
	)

	return Verdict.first_failure(
		lambda: compare_cells("zigzag-left", zig, identity_cell(left)),
		lambda: compare_cells("zigzag-right", zag, identity_cell(right))
	)


def check_loose_adjunction(left, right, eta, epsilon):
	"""
	Check a loose adjunction l ⊣ r with unit η: i_A → l;r and counit
	ε: r;l → i_B

	Both machines must have a single state; this is reported before the
	zig-zag identities are checked.

	:param MealyMachine left:  l: A ⇸ B
	:param MealyMachine right:  r: B ⇸ A
	:param Cell eta:
	:param Cell epsilon:
	:return Verdict:
	"""
	_check_adjunction_boundaries(left, right, eta, epsilon)

	if left.states.size != 1 or right.states.size != 1:
		return Verdict.fail("singleton-carriers", left_states=left.states.size, right_states=right.states.size)

	return _zigzags(left, right, eta, epsilon).with_detail(singletons=True)


def search_loose_adjunctions(input, output, max_states=None, mapper=map):
	"""
	All loose adjunctions between machines with a bounded amount of states

	The counit cell forces s_l(s_r(b, e_r), e_l) = b for all b and states,
	which is used to skip candidate pairs early.

	:param FinSet input:  A
	:param FinSet output:  B
	:param int max_states:  State bound for both machines
	:param mapper:  `map`-like callable used to spread the left machines
	over workers
	:return list:  LooseAdjunction tuples, in candidate order
	"""
	max_states = config.SEARCH_MAX_STATES if max_states is None else max_states
	rights = list(enumerate_machines(output, input, max_states))

	def adjunctions_for(left):
		found = []
		for right in rights:
			if not all(left.s[right.s[b][er]][el] == b for b in output for er in right.states for el in left.states):
				continue

			forward, backward = loose_compose(left, right), loose_compose(right, left)
			epsilon = Cell(backward, identity_loose(output), FinFun.identity(output), FinFun.identity(output), bang(backward.states))
			if not check_cell(epsilon):
				continue

			for unit_state in forward.states:
				eta = Cell(identity_loose(input), forward, FinFun.identity(input), FinFun.identity(input), _point(forward.states, unit_state))
				if _zigzags(left, right, eta, epsilon):
					found.append(LooseAdjunction(left, right, eta, epsilon))

		return found

	return [adjunction for batch in mapper(adjunctions_for, list(enumerate_machines(input, output, max_states))) for adjunction in batch]


def search_companions(function, max_states=None):
	"""
	All companions of f among machines with a bounded amount of states

	The counit cell forces s(a, e) = f(a) for every state, so only the
	transition tables and the image of the unit are enumerated.

	:param FinFun function:
	:param int max_states:
	:return list:  Companion tuples
	"""
	max_states = config.SEARCH_MAX_STATES if max_states is None else max_states
	domain, codomain = function.dom, function.cod
	found = []
	for size in range(1, max_states + 1):
		states = FinSet(size)
		outputs = tuple((function(a),) * size for a in domain)
		for flat in itertools.product(range(size), repeat=domain.size * size):
			machine = MealyMachine(domain, codomain, states, tuple(flat[a * size:(a + 1) * size] for a in domain), outputs)
			epsilon = Cell(machine, identity_loose(codomain), function, FinFun.identity(codomain), bang(states))
			for unit_state in states:
				eta = Cell(identity_loose(domain), machine, FinFun.identity(domain), function, _point(states, unit_state))
				if check_companion_identities(function, machine, epsilon, eta):
					found.append(Companion(machine, epsilon, eta))

	return found


def search_initial_object(max_size=3, max_alphabet=1, max_states=None, mapper=map):
	"""
	Bounded search for an initial object

	An object U would be initial if every machine admitted exactly one cell
	from i_U. For every U up to `max_size`, machines over alphabets up to
	`max_alphabet` letters are tried in order until one admits zero or
	several cells.

	:param int max_size:  Largest candidate object
	:param int max_alphabet:  Largest alphabet of test machines
	:param int max_states:  State bound of test machines
	:param mapper:  `map`-like callable used to spread candidates over workers
	:return SearchReport:
	"""
	max_states = config.SEARCH_MAX_STATES if max_states is None else max_states

	def refute(size):
		source = identity_loose(FinSet(size))
		for input_size, output_size in itertools.product(range(max_alphabet + 1), repeat=2):
			for machine in enumerate_machines(FinSet(input_size), FinSet(output_size), max_states):
				count = len(list(itertools.islice(enumerate_cells(source, machine), 2)))
				if count != 1:
					return {"object": size, "machine": machine, "cells": count}

		return None

	outcomes = list(mapper(refute, range(max_size + 1)))
	return SearchReport(
		{"max_size": max_size, "max_alphabet": max_alphabet, "max_states": max_states},
		[outcome for outcome in outcomes if outcome is not None],
		[size for size, outcome in enumerate(outcomes) if outcome is None]
	)


def search_tabulator(machine, max_carrier=None, max_test=1, budget=None):
	"""
	Bounded search for a tabulator of a machine m: A ⇸ B

	A candidate is a cell tau: i_T → m over tights (l, r), its single state
	sent to some state e. It is refuted by a test cell xi: i_U → m that
	factors through tau via no h: U → T, or via several.

	Candidates are grouped by e. A test cell from i_∅ whose state differs
	from e refutes the whole group at once, since every factorization
	through such a tau sends the single state to e. Groups that are not
	refuted this way are enumerated explicitly, up to carriers of
	`max_carrier` elements.

	:param MealyMachine machine:
	:param int max_carrier:  Largest carrier T; defaults to |A|·|B|
	:param int max_test:  Largest test object U
	:param int budget:  Refuse explicit enumerations larger than this
	:return SearchReport:
	"""
	max_carrier = machine.input.size * machine.output.size if max_carrier is None else max_carrier
	budget = config.ENUMERATION_BUDGET if budget is None else budget
	test_cells = [cell for size in range(max_test + 1) for cell in enumerate_cells(identity_loose(FinSet(size)), machine)]

	refutations, survivors = [], []
	for state in machine.states:
		blocking = next((cell for cell in test_cells if cell.top.input.size == 0 and cell.alpha(0) != state), None)
		if blocking is not None:
			refutations.append({"state": state, "candidates": "all", "refuted_by": blocking})
			continue

		estimate = len(test_cells) * sum((machine.input.size * machine.output.size) ** size for size in range(max_carrier + 1))
		if estimate > budget:
			raise BudgetExceededException("Tabulator search would check about %i factorizations" % estimate, estimate)

		for size in range(max_carrier + 1):
			carrier = FinSet(size)
			for l in all_functions(carrier, machine.input):
				for r in all_functions(carrier, machine.output):
					tau = Cell(identity_loose(carrier), machine, l, r, _point(machine.states, state))
					if not check_cell(tau):
						continue

					witness = _refute_tabulator(tau, test_cells)
					if witness is None:
						survivors.append(tau)
					else:
						refutations.append({"state": state, "candidates": tau, "refuted_by": witness})

	return SearchReport({"max_carrier": max_carrier, "max_test": max_test}, refutations, survivors)


def _refute_tabulator(tau, test_cells):
	"""
	First test cell that does not factor uniquely through tau

	:return Cell:  The test cell, or None
	"""
	for xi in test_cells:
		count = sum(1 for h in all_functions(xi.top.input, tau.top.input)
					if vertical_compose(tight_identity_cell(h), tau) == xi)
		if count != 1:
			return xi

	return None
