"""
Mealy machines as loose morphisms, cells between them, and the compositions
and coherence cells of the pseudo double category they form

A machine A ⇸ B has a finite state set E and tables d[a][e] (next state)
and s[a][e] (output). `loose_compose(m1, m2)` is "m1 then m2": the states
of the composite are pairs (e1, e2), flattened as e1 * |E2| + e2.
"""
import itertools

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from common.lib.exceptions import InputException
from common.lib.finsets import FinSet, FinFun, as_table, is_index, pair_index, unpair_index, product_map, all_functions
from common.lib.monoids import as_word, extend_tables
from common.lib.verdict import Verdict


@dataclass(frozen=True)
class MealyMachine:
	"""
	Mealy machine with input alphabet A, output alphabet B and state set E
	"""
	input: FinSet
	output: FinSet
	states: FinSet
	d: tuple
	s: tuple

	def __post_init__(self):
		object.__setattr__(self, "d", as_table(self.d, self.input.size, self.states.size, self.states.size, "$.d"))
		object.__setattr__(self, "s", as_table(self.s, self.input.size, self.states.size, self.output.size, "$.s"))

	@property
	def is_endo(self):
		return self.input == self.output

	@cached_property
	def arrays(self):
		"""
		The d and s tables as numpy arrays of shape |A| × |E|
		"""
		shape = (self.input.size, self.states.size)
		return (np.array(self.d, dtype=np.intp).reshape(shape), np.array(self.s, dtype=np.intp).reshape(shape))

	def step(self, letter, state):
		"""
		One transition

		:return tuple:  (output letter, next state)
		"""
		return self.s[letter][state], self.d[letter][state]


@dataclass(frozen=True)
class Cell:
	"""
	Square with machines `top`: A ⇸ B and `bottom`: X ⇸ Y, tight functions
	f: A → X and g: B → Y, and a state map alpha: E_top → E_bottom
	"""
	top: MealyMachine
	bottom: MealyMachine
	f: FinFun
	g: FinFun
	alpha: FinFun

	def __post_init__(self):
		boundaries = (
			("f", self.f.dom, self.top.input, "domain of f must be the input of the top machine"),
			("f", self.f.cod, self.bottom.input, "codomain of f must be the input of the bottom machine"),
			("g", self.g.dom, self.top.output, "domain of g must be the output of the top machine"),
			("g", self.g.cod, self.bottom.output, "codomain of g must be the output of the bottom machine"),
			("alpha", self.alpha.dom, self.top.states, "domain of alpha must be the states of the top machine"),
			("alpha", self.alpha.cod, self.bottom.states, "codomain of alpha must be the states of the bottom machine")
		)
		for field_name, actual, expected, message in boundaries:
			if actual != expected:
				raise InputException("Boundary mismatch: %s (%i ≠ %i)" % (message, actual.size, expected.size), "$." + field_name)


def identity_loose(carrier):
	"""
	Identity loose morphism i_X: a single state that echoes its input

	:param FinSet carrier:
	:return MealyMachine:
	"""
	return MealyMachine(carrier, carrier, FinSet.singleton(), tuple((0,) for _ in carrier), tuple((x,) for x in carrier))


def is_identity_loose(machine):
	return machine.is_endo and machine == identity_loose(machine.input)


def loose_compose(first, second):
	"""
	Cascade product: feed the output of `first` into `second`

	States are pairs (e1, e2) in lexicographic order with

	    d(a, (e1, e2)) = (d1(a, e1), d2(s1(a, e1), e2))
	    s(a, (e1, e2)) = s2(s1(a, e1), e2)

	:param MealyMachine first:  Machine A ⇸ B
	:param MealyMachine second:  Machine B ⇸ C
	:return MealyMachine:  Machine A ⇸ C
	"""
	if first.output != second.input:
		raise InputException("Cannot compose machines: output of size %i does not match input of size %i" % (
			first.output.size, second.input.size))

	width = second.states.size
	d, s = [], []
	for a in first.input:
		d_row, s_row = [], []
		for e1, e2 in itertools.product(first.states, second.states):
			b, next_first = first.step(a, e1)
			c, next_second = second.step(b, e2)
			d_row.append(pair_index(next_first, next_second, width))
			s_row.append(c)
		d.append(tuple(d_row))
		s.append(tuple(s_row))

	return MealyMachine(first.input, second.output, FinSet(first.states.size * width), tuple(d), tuple(s))


def tensor_machines(first, second):
	"""
	Parallel product: both machines run side by side on pairs of letters

	Inputs, outputs and states are products, flattened lexicographically.

	:param MealyMachine first:  Machine A1 ⇸ B1
	:param MealyMachine second:  Machine A2 ⇸ B2
	:return MealyMachine:  Machine A1×A2 ⇸ B1×B2
	"""
	d, s = [], []
	for a1, a2 in itertools.product(first.input, second.input):
		d_row, s_row = [], []
		for e1, e2 in itertools.product(first.states, second.states):
			b1, next_first = first.step(a1, e1)
			b2, next_second = second.step(a2, e2)
			d_row.append(pair_index(next_first, next_second, second.states.size))
			s_row.append(pair_index(b1, b2, second.output.size))
		d.append(tuple(d_row))
		s.append(tuple(s_row))

	return MealyMachine(
		FinSet(first.input.size * second.input.size),
		FinSet(first.output.size * second.output.size),
		FinSet(first.states.size * second.states.size),
		tuple(d), tuple(s)
	)


def _swap(first_size, second_size):
	"""
	The bijection X×Y → Y×X
	"""
	dom = FinSet(first_size * second_size)
	return FinFun.from_callable(dom, dom, lambda index: pair_index(*reversed(unpair_index(index, second_size)), first_size))


def symmetry_cell(first, second):
	"""
	Invertible cell first⊗second → second⊗first swapping both components

	:param MealyMachine first:
	:param MealyMachine second:
	:return Cell:
	"""
	return Cell(
		tensor_machines(first, second), tensor_machines(second, first),
		_swap(first.input.size, second.input.size),
		_swap(first.output.size, second.output.size),
		_swap(first.states.size, second.states.size)
	)


def check_cell(cell):
	"""
	Check the cell condition

	For all (a, e): d_bottom(f a, α e) = α(d_top(a, e)) and
	s_bottom(f a, α e) = g(s_top(a, e)).

	:param Cell cell:
	:return Verdict:  On failure, law is `cell-d` or `cell-s` with the first
	violating (a, e) in lexicographic order
	"""
	top_d, top_s = cell.top.arrays
	bottom_d, bottom_s = cell.bottom.arrays
	f = np.array(cell.f.table, dtype=np.intp)
	g = np.array(cell.g.table, dtype=np.intp)
	alpha = np.array(cell.alpha.table, dtype=np.intp)

	lhs_d = bottom_d[f[:, None], alpha[None, :]]
	rhs_d = alpha[top_d]
	lhs_s = bottom_s[f[:, None], alpha[None, :]]
	rhs_s = g[top_s]

	violations = np.argwhere((lhs_d != rhs_d) | (lhs_s != rhs_s))
	if not len(violations):
		return Verdict.ok()

	a, e = (int(value) for value in violations[0])
	if lhs_d[a, e] != rhs_d[a, e]:
		return Verdict.fail("cell-d", a=a, e=e, lhs=int(lhs_d[a, e]), rhs=int(rhs_d[a, e]))

	return Verdict.fail("cell-s", a=a, e=e, lhs=int(lhs_s[a, e]), rhs=int(rhs_s[a, e]))


def identity_cell(machine):
	"""
	Identity cell on a machine

	:param MealyMachine machine:
	:return Cell:
	"""
	return Cell(machine, machine, FinFun.identity(machine.input), FinFun.identity(machine.output), FinFun.identity(machine.states))


def tight_identity_cell(function):
	"""
	The cell ι_f between identity loose morphisms over a tight f

	:param FinFun function:
	:return Cell:
	"""
	return Cell(identity_loose(function.dom), identity_loose(function.cod), function, function, FinFun.identity(FinSet.singleton()))


def cells_equal(first, second):
	"""
	Extensional equality of cells: same boundaries and the same tables

	:return bool:
	"""
	return first == second


def invert_cell(cell):
	"""
	Inverse of a cell whose tights and state map are bijections

	:param Cell cell:
	:return Cell:
	"""
	for name in ("f", "g", "alpha"):
		if not getattr(cell, name).is_bijective():
			raise InputException("Cell is not invertible: %s is not a bijection" % name, "$." + name)

	return Cell(cell.bottom, cell.top, cell.f.inverse(), cell.g.inverse(), cell.alpha.inverse())


def horizontal_compose(left, right):
	"""
	Place two cells side by side

	The right tight of `left` must equal the left tight of `right`; the
	state map of the composite is α1 × α2 on the cascade products.

	:param Cell left:
	:param Cell right:
	:return Cell:
	"""
	if left.g != right.f:
		raise InputException("Cells are not horizontally composable: right tight of the first cell differs from left tight of the second")

	return Cell(
		loose_compose(left.top, right.top),
		loose_compose(left.bottom, right.bottom),
		left.f, right.g,
		product_map(left.alpha, right.alpha)
	)


def vertical_compose(upper, lower):
	"""
	Stack two cells

	The bottom machine of `upper` must equal the top machine of `lower`.

	:param Cell upper:
	:param Cell lower:
	:return Cell:
	"""
	if upper.bottom != lower.top:
		raise InputException("Cells are not vertically composable: bottom machine of the first cell differs from top machine of the second")

	return Cell(upper.top, lower.bottom, lower.f.after(upper.f), lower.g.after(upper.g), lower.alpha.after(upper.alpha))


def cell_compose(direction, first, second):
	"""
	Compose two cells horizontally or vertically

	:param str direction:  `horizontal` or `vertical`
	:param Cell first:  Left or upper cell
	:param Cell second:  Right or lower cell
	:return Cell:
	"""
	if direction == "horizontal":
		return horizontal_compose(first, second)
	elif direction == "vertical":
		return vertical_compose(first, second)

	raise InputException("Unknown direction '%s'; use 'horizontal' or 'vertical'" % direction)


def vertical_chain(*cells):
	"""
	Vertical composite of a sequence of cells, top to bottom

	:return Cell:
	"""
	result = cells[0]
	for cell in cells[1:]:
		result = vertical_compose(result, cell)

	return result


def associator(first, second, third):
	"""
	Invertible cell (first;second);third → first;(second;third)

	:return Cell:
	"""
	source = loose_compose(loose_compose(first, second), third)
	target = loose_compose(first, loose_compose(second, third))
	n2, n3 = second.states.size, third.states.size

	def rebracket(index):
		e12, e3 = unpair_index(index, n3)
		e1, e2 = unpair_index(e12, n2)
		return pair_index(e1, pair_index(e2, e3, n3), n2 * n3)

	return Cell(source, target, FinFun.identity(first.input), FinFun.identity(third.output),
				FinFun.from_callable(source.states, target.states, rebracket))


def left_unitor(machine):
	"""
	Invertible cell i_A;m → m, dropping the identity's single state

	:param MealyMachine machine:  Machine A ⇸ B
	:return Cell:
	"""
	source = loose_compose(identity_loose(machine.input), machine)
	return Cell(source, machine, FinFun.identity(machine.input), FinFun.identity(machine.output),
				FinFun.from_callable(source.states, machine.states, lambda index: unpair_index(index, machine.states.size)[1]))


def right_unitor(machine):
	"""
	Invertible cell m;i_B → m, dropping the identity's single state

	:param MealyMachine machine:  Machine A ⇸ B
	:return Cell:
	"""
	source = loose_compose(machine, identity_loose(machine.output))
	return Cell(source, machine, FinFun.identity(machine.input), FinFun.identity(machine.output),
				FinFun.from_callable(source.states, machine.states, lambda index: unpair_index(index, 1)[0]))


def check_pentagon(first, second, third, fourth):
	"""
	Pentagon identity for four composable machines

	Both rebracketings of ((m1;m2);m3);m4 into m1;(m2;(m3;m4)) must agree.

	:return Verdict:
	"""
	direct = vertical_compose(
		associator(loose_compose(first, second), third, fourth),
		associator(first, second, loose_compose(third, fourth))
	)
	detour = vertical_chain(
		horizontal_compose(associator(first, second, third), identity_cell(fourth)),
		associator(first, loose_compose(second, third), fourth),
		horizontal_compose(identity_cell(first), associator(second, third, fourth))
	)

	return compare_cells("pentagon", direct, detour)


def check_triangle(first, second):
	"""
	Triangle identity for two composable machines

	From (m1;i_B);m2 to m1;m2, eliding the unit directly must agree with
	rebracketing first and eliding it on the other side.

	:return Verdict:
	"""
	direct = horizontal_compose(right_unitor(first), identity_cell(second))
	detour = vertical_compose(
		associator(first, identity_loose(first.output), second),
		horizontal_compose(identity_cell(first), left_unitor(second))
	)

	return compare_cells("triangle", direct, detour)


def compare_cells(law, lhs, rhs):
	"""
	Verdict on the equality of two parallel cells

	:param str law:  Label to report on failure
	:param Cell lhs:
	:param Cell rhs:
	:return Verdict:
	"""
	if lhs.top != rhs.top or lhs.bottom != rhs.bottom:
		return Verdict.fail(law, reason="boundary machines differ")

	for name in ("f", "g", "alpha"):
		left, right = getattr(lhs, name), getattr(rhs, name)
		for element, (value, other) in enumerate(zip(left.table, right.table)):
			if value != other:
				return Verdict.fail(law, component=name, element=element, lhs=value, rhs=other)

	return Verdict.ok()


def run_machine(machine, state, word):
	"""
	Run a machine over a word, left to right

	Each step (a, e) emits s(a, e) and moves to d(a, e).

	:param MealyMachine machine:
	:param int state:  Starting state
	:param word:  Input letters
	:return tuple:  (output word, final state)
	"""
	if not is_index(state) or state not in machine.states:
		raise InputException("State %s is not a state of the machine" % repr(state), "$.state")

	word = as_word(word, machine.input.size, "$.word")
	emitted = []
	for letter in word:
		output, state = machine.step(letter, state)
		emitted.append(output)

	return tuple(emitted), state


def extend_words(machine, word, state):
	"""
	Canonical extensions of d and s to words

	:param MealyMachine machine:
	:param word:  Input letters
	:param int state:
	:return tuple:  (word ⊗⁺ state, word ⊙⁺ state)
	"""
	if not is_index(state) or state not in machine.states:
		raise InputException("State %s is not a state of the machine" % repr(state), "$.state")

	return extend_tables(machine.d, machine.s, as_word(word, machine.input.size, "$.word"), state)


def extend_actions(machine, word, state):
	"""
	(w ⊗⁺ e, w ⊙⁺ e) for an endomorphism A ⇸ A

	:param MealyMachine machine:
	:param word:
	:param int state:
	:return tuple:
	"""
	if not machine.is_endo:
		raise InputException("Actions only extend for machines A ⇸ A (input size %i, output size %i)" % (
			machine.input.size, machine.output.size), "$.output")

	return extend_words(machine, word, state)


def enumerate_machines(input, output, max_states, min_states=0):
	"""
	All machines between two alphabets with a bounded amount of states

	Ordered by amount of states, then lexicographically by (d, s).

	:param FinSet input:
	:param FinSet output:
	:param int max_states:
	:param int min_states:
	:return:  Generator of MealyMachine
	"""
	for size in range(min_states, max_states + 1):
		states = FinSet(size)
		cells = input.size * size
		for d in itertools.product(range(size), repeat=cells):
			for s in itertools.product(range(output.size), repeat=cells):
				yield MealyMachine(input, output, states, _rows(d, input.size, size), _rows(s, input.size, size))


def enumerate_cells(top, bottom, f=None, g=None):
	"""
	All valid cells between two machines

	:param MealyMachine top:
	:param MealyMachine bottom:
	:param FinFun f:  Fix the left tight, if given
	:param FinFun g:  Fix the right tight, if given
	:return:  Generator of Cell, in lexicographic order of (f, g, alpha)
	"""
	lefts = [f] if f is not None else all_functions(top.input, bottom.input)
	for left in lefts:
		rights = [g] if g is not None else all_functions(top.output, bottom.output)
		for right in rights:
			for alpha in all_functions(top.states, bottom.states):
				cell = Cell(top, bottom, left, right, alpha)
				if check_cell(cell):
					yield cell


def _rows(flat, rows, width):
	"""
	Cut a flat tuple into rows of a given width
	"""
	return tuple(tuple(flat[row * width:(row + 1) * width]) for row in range(rows))
