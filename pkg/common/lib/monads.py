"""
Monads in the double category of Mealy machines

A monad on A is a machine M: A ⇸ A with a unit state e0 and a
multiplication μ on its states, subject to

    ac_1  s(a, e0) = a
    ac_2  d(a, e0) = e0
    mc_1  s(a, μ(e, e')) = s(s(a, e), e')
    mc_2  d(a, μ(e, e')) = μ(d(a, e), d(s(a, e), e'))
    ma_1  μ is associative
    ma_2  e0 is neutral for μ

Truncated monads (free monads cut off at a word length) mark products that
leave the truncation with -1; laws are only checked where every product
involved is defined.
"""
import itertools

from dataclasses import dataclass
from typing import NamedTuple

import config

from common.lib.exceptions import InputException, ViolationException, ConstructionException, BudgetExceededException
from common.lib.finsets import FinSet, FinFun, as_table, is_index, all_functions, pair_index, unpair_index
from common.lib.mealy import (Cell, MealyMachine, check_cell, extend_words, identity_loose, loose_compose)
from common.lib.monoids import FinMonoid, MatchedPair, BicrossedElement, words, bicrossed_multiply, check_monoid_laws
from common.lib.verdict import Verdict

UNDEFINED = -1


@dataclass(frozen=True)
class DoubleMonad:
	"""
	Monad (M, e0, μ) on an alphabet A
	"""
	machine: MealyMachine
	e0: int
	mu: tuple
	truncated: bool = False

	def __post_init__(self):
		if not self.machine.is_endo:
			raise InputException("A monad needs a machine A ⇸ A (input size %i, output size %i)" % (
				self.machine.input.size, self.machine.output.size), "$.machine.output")

		states = self.machine.states.size
		if not is_index(self.e0) or self.e0 not in self.machine.states:
			raise InputException("Unit %s is not a state of the machine" % repr(self.e0), "$.e0")

		object.__setattr__(self, "mu", as_table(self.mu, states, states, states, "$.mu", undefined=self.truncated))

	@property
	def alphabet(self):
		return self.machine.input

	@property
	def states(self):
		return self.machine.states

	@property
	def d(self):
		return self.machine.d

	@property
	def s(self):
		return self.machine.s

	def multiply(self, e, e_prime):
		"""
		μ(e, e'), or None if undefined in a truncated monad
		"""
		if e is None or e_prime is None:
			return None

		product = self.mu[e][e_prime]
		return None if product == UNDEFINED else product

	@property
	def monoid(self):
		"""
		The monoid (E, μ, e0); only available for untruncated monads
		"""
		return FinMonoid(self.states, self.e0, self.mu)

	@classmethod
	def trivial(cls, alphabet):
		"""
		Monad with a single state that echoes its input

		:param FinSet alphabet:
		:return DoubleMonad:
		"""
		return cls(identity_loose(alphabet), 0, ((0,),))

	@classmethod
	def from_monoid(cls, alphabet, monoid):
		"""
		Monad whose states form a monoid acting trivially on both sides:
		d(a, e) = e and s(a, e) = a

		:param FinSet alphabet:
		:param FinMonoid monoid:
		:return DoubleMonad:
		"""
		machine = MealyMachine(alphabet, alphabet, monoid.carrier,
							   tuple(tuple(monoid.carrier) for _ in alphabet),
							   tuple((a,) * monoid.carrier.size for a in alphabet))
		return cls(machine, monoid.unit, monoid.mult)


def _check_monoid_part(monad):
	"""
	ma_1 and ma_2, skipping undefined products
	"""
	if not monad.truncated:
		verdict = check_monoid_laws(monad.monoid)
		return verdict.relabel("ma_1" if verdict.law == "associativity" else "ma_2")

	states = list(monad.states)
	for x, y, z in itertools.product(states, repeat=3):
		lhs = monad.multiply(monad.multiply(x, y), z)
		rhs = monad.multiply(x, monad.multiply(y, z))
		if lhs is not None and rhs is not None and lhs != rhs:
			return Verdict.fail("ma_1", triple=[x, y, z], lhs=lhs, rhs=rhs)

	for x in states:
		for lhs, side in ((monad.multiply(monad.e0, x), "left"), (monad.multiply(x, monad.e0), "right")):
			if lhs != x:
				return Verdict.fail("ma_2", element=x, side=side, lhs=lhs, rhs=x)

	return Verdict.ok()


def check_monad(monad):
	"""
	Check all six monad axioms

	The monoid laws come first (ma_1, ma_2), then the unit laws of the
	machine (ac_1, ac_2) and its compatibility with μ (mc_1, mc_2).

	:param DoubleMonad monad:
	:return Verdict:  On failure, law is the label of the axiom
	"""
	verdict = _check_monoid_part(monad)
	if not verdict:
		return verdict

	d, s, e0 = monad.d, monad.s, monad.e0
	for a in monad.alphabet:
		if s[a][e0] != a:
			return Verdict.fail("ac_1", a=a, lhs=s[a][e0], rhs=a)

	for a in monad.alphabet:
		if d[a][e0] != e0:
			return Verdict.fail("ac_2", a=a, lhs=d[a][e0], rhs=e0)

	for a in monad.alphabet:
		for e, e_prime in itertools.product(monad.states, repeat=2):
			product = monad.multiply(e, e_prime)
			if product is not None and s[a][product] != s[s[a][e]][e_prime]:
				return Verdict.fail("mc_1", a=a, e=e, e_prime=e_prime, lhs=s[a][product], rhs=s[s[a][e]][e_prime])

	for a in monad.alphabet:
		for e, e_prime in itertools.product(monad.states, repeat=2):
			product = monad.multiply(e, e_prime)
			if product is None:
				continue

			rhs = monad.multiply(d[a][e], d[s[a][e]][e_prime])
			if rhs is not None and d[a][product] != rhs:
				return Verdict.fail("mc_2", a=a, e=e, e_prime=e_prime, lhs=d[a][product], rhs=rhs)

	return Verdict.ok()


def unit_cell(monad):
	"""
	The unit η: i_A → M, sending the single state to e0

	:param DoubleMonad monad:
	:return Cell:
	"""
	identity = FinFun.identity(monad.alphabet)
	return Cell(identity_loose(monad.alphabet), monad.machine, identity, identity, FinFun(FinSet.singleton(), monad.states, (monad.e0,)))


def multiplication_cell(monad):
	"""
	The multiplication M;M → M, sending (e, e') to μ(e, e')

	:param DoubleMonad monad:
	:return Cell:
	"""
	if monad.truncated:
		raise InputException("The multiplication of a truncated monad is partial and has no cell")

	identity = FinFun.identity(monad.alphabet)
	composite = loose_compose(monad.machine, monad.machine)
	size = monad.states.size
	return Cell(composite, monad.machine, identity, identity,
				FinFun.from_callable(composite.states, monad.states, lambda index: monad.mu[index // size][index % size]))


def monoid_candidates(state_size):
	"""
	All monoid structures on a set of states, as (e0, μ) pairs

	The row and column of e0 are forced by unitality; the remaining entries
	are enumerated and kept if associative.

	:param int state_size:
	:return list:  (e0, μ) pairs in lexicographic order
	"""
	carrier = FinSet(state_size)
	candidates = []
	for e0 in carrier:
		others = [e for e in carrier if e != e0]
		for free in itertools.product(carrier, repeat=len(others) ** 2):
			mu = [[0] * state_size for _ in carrier]
			for e in carrier:
				mu[e0][e] = mu[e][e0] = e

			for (x, y), value in zip(itertools.product(others, repeat=2), free):
				mu[x][y] = value

			monoid = FinMonoid(carrier, e0, tuple(tuple(row) for row in mu))
			if check_monoid_laws(monoid):
				candidates.append((e0, monoid.mult))

	return candidates


def estimate_monad_space(alphabet_size, state_size):
	"""
	Amount of candidates enumerate_monads would consider

	:return int:
	"""
	monoids = state_size * state_size ** ((state_size - 1) ** 2)
	rows = (state_size * alphabet_size) ** (alphabet_size * (state_size - 1))
	return monoids + monoids * rows


def monads_over_monoid(alphabet_size, state_size, e0, mu):
	"""
	All monads with a given monoid of states

	Output tables are enumerated first and filtered on ac_1 and mc_1, then
	transition tables for each surviving output table, filtered on ac_2 and
	mc_2.

	:param int alphabet_size:
	:param int state_size:
	:param int e0:
	:param tuple mu:
	:return list:  DoubleMonad objects
	"""
	alphabet, states = FinSet(alphabet_size), FinSet(state_size)
	others = [e for e in states if e != e0]
	slots = list(itertools.product(alphabet, others))

	def fill(values, forced):
		table = [[forced(a)] * state_size for a in alphabet]
		for (a, e), value in zip(slots, values):
			table[a][e] = value
		return tuple(tuple(row) for row in table)

	found = []
	for s_values in itertools.product(alphabet, repeat=len(slots)):
		s = fill(s_values, lambda a: a)
		if any(s[a][mu[e][e_prime]] != s[s[a][e]][e_prime] for a in alphabet for e in states for e_prime in states):
			continue

		for d_values in itertools.product(states, repeat=len(slots)):
			d = fill(d_values, lambda a: e0)
			if any(d[a][mu[e][e_prime]] != mu[d[a][e]][d[s[a][e]][e_prime]] for a in alphabet for e in states for e_prime in states):
				continue

			monad = DoubleMonad(MealyMachine(alphabet, alphabet, states, d, s), e0, mu)
			if not check_monad(monad):
				raise ConstructionException("Enumerated table set fails the monad axioms")

			found.append(monad)

	return found


def enumerate_monads(alphabet_size, state_size, budget=None, mapper=map):
	"""
	All monads with given alphabet and state sizes

	:param int alphabet_size:  |A| ≥ 1
	:param int state_size:  |E| ≥ 1
	:param int budget:  Refuse if more candidates than this would be considered
	:param mapper:  `map`-like callable used to spread monoid candidates over
	workers
	:return list:  DoubleMonad objects ordered by (d, s, e0, μ)
	"""
	if alphabet_size < 1 or state_size < 1:
		raise InputException("Alphabet and state sizes must be at least 1")

	budget = config.ENUMERATION_BUDGET if budget is None else budget
	estimate = estimate_monad_space(alphabet_size, state_size)
	if estimate > budget:
		raise BudgetExceededException("Enumerating monads with |A| = %i, |E| = %i would consider about %i candidates (budget %i)" % (
			alphabet_size, state_size, estimate, budget), estimate)

	batches = mapper(lambda candidate: monads_over_monoid(alphabet_size, state_size, *candidate), monoid_candidates(state_size))
	monads = [monad for batch in batches for monad in batch]
	return sorted(monads, key=lambda monad: (monad.d, monad.s, monad.e0, monad.mu))


def derive_matched_pair(monad):
	"""
	The matched pair (E, A, d, s) underlying a monad

	:param DoubleMonad monad:
	:return MatchedPair:
	"""
	verdict = check_monad(monad)
	if not verdict:
		raise InputException("Not a monad: fails %s" % verdict.law, "$")

	if monad.truncated:
		raise InputException("Truncated monads have no underlying monoid", "$.truncated")

	return MatchedPair(monad.monoid, monad.alphabet, monad.d, monad.s)


@dataclass(frozen=True)
class FreeMonadConfig:
	"""
	How the recursions defining the free monad are read

	`s_reverse` reverses the tail at every step of s⁺; `d_threading` is
	`threaded` (the tail sees s(a, e)) or `pointwise` (the tail sees a);
	`mu_order` is `concat` (μ(es, es') = es ⌢ es') or `reversed`.
	"""
	bound: int = config.FREE_MONAD_BOUND
	s_reverse: bool = False
	d_threading: str = "threaded"
	mu_order: str = "concat"

	def __post_init__(self):
		if not is_index(self.bound) or self.bound < 0:
			raise InputException("Bound must be a non-negative integer", "$.bound")

		if self.d_threading not in ("threaded", "pointwise"):
			raise InputException("Threading must be 'threaded' or 'pointwise'", "$.d_threading")

		if self.mu_order not in ("concat", "reversed"):
			raise InputException("Multiplication order must be 'concat' or 'reversed'", "$.mu_order")

	@classmethod
	def literal(cls, bound=None):
		"""
		The recursions exactly as usually written down: s⁺ reversing its tail
		and d⁺ applying the same letter to every state of the word
		"""
		return cls(bound=config.FREE_MONAD_BOUND if bound is None else bound, s_reverse=True, d_threading="pointwise")

	def as_dict(self):
		return {"bound": self.bound, "s_reverse": self.s_reverse, "d_threading": self.d_threading, "mu_order": self.mu_order}


class FreeMonad(NamedTuple):
	monad: DoubleMonad
	unit: Cell
	words: list
	verdict: Verdict
	discrepancy: dict


def _free_s(machine, letter, word, reverse):
	"""
	s⁺(a, e::es) = s⁺(s(a, e), es), optionally reversing es at each step
	"""
	while word:
		letter = machine.s[letter][word[0]]
		word = tuple(reversed(word[1:])) if reverse else word[1:]

	return letter


def _free_d(machine, letter, word, threading):
	"""
	d⁺(a, e::es) = d(a, e) :: d⁺(a', es), with a' = s(a, e) when threaded
	and a' = a when pointwise
	"""
	result = []
	for state in word:
		result.append(machine.d[letter][state])
		if threading == "threaded":
			letter = machine.s[letter][state]

	return tuple(result)


def _free_tables(machine, cfg):
	"""
	Words and tables of the truncated free monad on a machine

	:return tuple:  (words, d, s, mu)
	"""
	state_words = list(words(machine.states.size, cfg.bound))
	index = {word: position for position, word in enumerate(state_words)}

	d = tuple(tuple(index[_free_d(machine, a, word, cfg.d_threading)] for word in state_words) for a in machine.input)
	s = tuple(tuple(_free_s(machine, a, word, cfg.s_reverse) for word in state_words) for a in machine.input)

	def concatenate(first, second):
		product = first + second if cfg.mu_order == "concat" else second + first
		return index.get(product, UNDEFINED)

	mu = tuple(tuple(concatenate(first, second) for second in state_words) for first in state_words)
	return state_words, d, s, mu


def _truncated_monad(machine, cfg):
	state_words, d, s, mu = _free_tables(machine, cfg)
	free_machine = MealyMachine(machine.input, machine.output, FinSet(len(state_words)), d, s)
	return state_words, DoubleMonad(free_machine, 0, mu, truncated=True)


def free_monad(machine, cfg=None):
	"""
	Free monad on an endomorphism F: A ⇸ A, truncated at a word length

	States are the words over the states of F of length up to the bound, in
	shortlex order; the unit is the empty word. The cell ν: F → M(F) sends e
	to [e]. The axioms are checked on the truncation, and the tables are
	compared with those of the literal recursions.

	:param MealyMachine machine:
	:param FreeMonadConfig cfg:
	:return FreeMonad:
	"""
	cfg = FreeMonadConfig() if cfg is None else cfg
	if not machine.is_endo:
		raise InputException("Free monads exist on machines A ⇸ A only", "$.output")

	if cfg.bound < 1:
		raise InputException("Free monad bound must be at least 1", "$.bound")

	state_words, monad = _truncated_monad(machine, cfg)
	index = {word: position for position, word in enumerate(state_words)}
	identity = FinFun.identity(machine.input)
	unit = Cell(machine, monad.machine, identity, identity,
				FinFun.from_callable(machine.states, monad.states, lambda e: index[(e,)]))

	verdict = check_monad(monad)
	return FreeMonad(monad, unit, state_words, verdict, discrepancy_report(machine, cfg, state_words, monad, verdict))


def discrepancy_report(machine, cfg, state_words, monad, verdict):
	"""
	Compare a free monad with the one given by the literal recursions

	:return dict:  Both interpretations with their verdicts, the amount of
	table entries in which they differ and the first difference
	"""
	literal_cfg = FreeMonadConfig.literal(cfg.bound)
	literal_words, literal = _truncated_monad(machine, literal_cfg)

	differences = []
	for table in ("d", "s"):
		ours, theirs = getattr(monad, table), getattr(literal, table)
		for a in machine.input:
			for position, word in enumerate(state_words):
				if ours[a][position] != theirs[a][position]:
					differences.append({"table": table, "a": a, "word": word, "configured": _readable(table, ours[a][position], state_words),
										"literal": _readable(table, theirs[a][position], literal_words)})

	for first, second in itertools.product(range(len(state_words)), repeat=2):
		if monad.mu[first][second] != literal.mu[first][second]:
			differences.append({"table": "mu", "words": [state_words[first], state_words[second]],
								"configured": monad.mu[first][second], "literal": literal.mu[first][second]})

	return {
		"configured": {"interpretation": cfg.as_dict(), "verdict": verdict.to_json()},
		"literal": {"interpretation": literal_cfg.as_dict(), "verdict": check_monad(literal).to_json()},
		"difference_count": len(differences),
		"first_difference": differences[0] if differences else None
	}


def _readable(table, value, state_words):
	return list(state_words[value]) if table == "d" else value


def free_monad_law_search(machine, bound=None):
	"""
	Check the monad axioms under every interpretation of the recursions

	:param MealyMachine machine:
	:param int bound:
	:return list:  (FreeMonadConfig, Verdict) pairs
	"""
	bound = config.FREE_MONAD_BOUND if bound is None else bound
	results = []
	for s_reverse, d_threading, mu_order in itertools.product((False, True), ("threaded", "pointwise"), ("concat", "reversed")):
		cfg = FreeMonadConfig(bound, s_reverse, d_threading, mu_order)
		results.append((cfg, check_monad(_truncated_monad(machine, cfg)[1])))

	return results


@dataclass(frozen=True)
class TightMonadMorphism:
	"""
	Tight morphism of monads: a function on alphabets and one on states
	"""
	f: FinFun
	alpha: FinFun


class FreeExtension(NamedTuple):
	morphism: TightMonadMorphism
	verdict: Verdict


def _check_tight_boundaries(source, target, morphism):
	expectations = (
		(morphism.f.dom, source.alphabet, "$.f.dom"), (morphism.f.cod, target.alphabet, "$.f.cod"),
		(morphism.alpha.dom, source.states, "$.alpha.dom"), (morphism.alpha.cod, target.states, "$.alpha.cod")
	)
	for actual, expected, path in expectations:
		if actual != expected:
			raise InputException("Morphism boundary mismatch (%i ≠ %i)" % (actual.size, expected.size), path)


def check_tight_monad_morphism(source, target, morphism):
	"""
	Check that (f, α) is a morphism of monads

	In order: α preserves the unit, α preserves μ (where defined), and
	(f, f, α) is a cell from the source machine to the target machine.

	:param DoubleMonad source:
	:param DoubleMonad target:
	:param TightMonadMorphism morphism:
	:return Verdict:
	"""
	_check_tight_boundaries(source, target, morphism)
	alpha = morphism.alpha

	if alpha(source.e0) != target.e0:
		return Verdict.fail("unit", lhs=alpha(source.e0), rhs=target.e0)

	for e, e_prime in itertools.product(source.states, repeat=2):
		product = source.multiply(e, e_prime)
		if product is None:
			continue

		rhs = target.multiply(alpha(e), alpha(e_prime))
		if alpha(product) != rhs:
			return Verdict.fail("multiplication", e=e, e_prime=e_prime, lhs=alpha(product), rhs=rhs)

	return check_cell(Cell(source.machine, target.machine, morphism.f, morphism.f, alpha))


def induced_bicrossed_hom(source, target, morphism, bound=None):
	"""
	Homomorphism E⋈A* → E'⋈B* induced by a tight monad morphism

	(e, w) is sent to (α(e), f applied to every letter of w). The map is
	checked to be unital and multiplicative on all pairs of elements whose
	words have total length up to the bound.

	:param DoubleMonad source:
	:param DoubleMonad target:
	:param TightMonadMorphism morphism:
	:param int bound:
	:return tuple:  (table, verdict); the table is a list of
	[source element, image] pairs
	"""
	bound = config.WORD_BOUND if bound is None else bound
	verdict = check_tight_monad_morphism(source, target, morphism)
	if not verdict:
		raise ViolationException("Not a morphism of monads", verdict)

	source_pair, target_pair = derive_matched_pair(source), derive_matched_pair(target)

	def image(element):
		return BicrossedElement(morphism.alpha(element.e), tuple(morphism.f(letter) for letter in element.w))

	elements = [BicrossedElement(e, word) for e in source.states for word in words(source.alphabet.size, bound)]
	table = [[[element.e, list(element.w)], [image(element).e, list(image(element).w)]] for element in elements]

	unit = BicrossedElement(source.e0, ())
	if image(unit) != BicrossedElement(target.e0, ()):
		return table, Verdict.fail("hom-unit", lhs=[image(unit).e, list(image(unit).w)], rhs=[target.e0, []])

	for x in elements:
		for y in elements:
			if len(x.w) + len(y.w) > bound:
				continue

			lhs = image(bicrossed_multiply(x, y, source_pair))
			rhs = bicrossed_multiply(image(x), image(y), target_pair)
			if lhs != rhs:
				return table, Verdict.fail("hom-multiplication", x=[x.e, list(x.w)], y=[y.e, list(y.w)],
										   lhs=[lhs.e, list(lhs.w)], rhs=[rhs.e, list(rhs.w)])

	return table, Verdict.ok(bound=bound)


def free_monad_extend(machine, gamma, target, cfg=None):
	"""
	Extend a cell γ: F → N into a morphism of monads γ*: M(F) → N

	γ*(ε) = e0 and γ*(e::es) = μ_N(γ(e), γ*(es)).

	:param MealyMachine machine:  F: A ⇸ A
	:param Cell gamma:  Cell from F to the machine of N with identity tights
	:param DoubleMonad target:  N
	:param FreeMonadConfig cfg:
	:return FreeExtension:  The morphism and its verdict as a morphism of
	the truncated monads
	"""
	cfg = FreeMonadConfig() if cfg is None else cfg
	identity = FinFun.identity(machine.input)
	if gamma.top != machine or gamma.bottom != target.machine or gamma.f != identity or gamma.g != identity:
		raise InputException("Cell must run from F to the target monad's machine with identity tights", "$.gamma")

	verdict = check_cell(gamma)
	if not verdict:
		raise InputException("Cell is not valid: fails %s at a = %i, e = %i" % (verdict.law, verdict.witness["a"], verdict.witness["e"]), "$.gamma")

	free = free_monad(machine, cfg)
	table = []
	for word in free.words:
		value = target.e0
		for state in reversed(word):
			value = target.multiply(gamma.alpha(state), value)
		table.append(value)

	morphism = TightMonadMorphism(identity, FinFun(free.monad.states, target.states, tuple(table)))
	if morphism.alpha.after(free.unit.alpha) != gamma.alpha:
		raise ConstructionException("Extension does not restrict to the given cell")

	return FreeExtension(morphism, check_tight_monad_morphism(free.monad, target, morphism))


def check_free_extension_unique(machine, gamma, target, cfg=None):
	"""
	Check by enumeration that exactly one state map extends γ

	Every map α: E^{≤L} → E_N with α∘ν = γ that makes (id, α) a morphism
	of the truncated monads is counted.

	:return Verdict:
	"""
	cfg = FreeMonadConfig() if cfg is None else cfg
	extension = free_monad_extend(machine, gamma, target, cfg)
	free = free_monad(machine, cfg)

	matches = []
	for alpha in all_functions(free.monad.states, target.states):
		if alpha.after(free.unit.alpha) != gamma.alpha:
			continue

		if check_tight_monad_morphism(free.monad, target, TightMonadMorphism(extension.morphism.f, alpha)):
			matches.append(alpha)

	if len(matches) != 1 or matches[0] != extension.morphism.alpha:
		return Verdict.fail("free-extension-uniqueness", extensions=len(matches))

	return Verdict.ok(extensions=1)


@dataclass(frozen=True)
class ModuleStructure:
	"""
	Left module over a monad: a machine P: A ⇸ X with states P and an action
	ξ: E × P → P
	"""
	monad: DoubleMonad
	machine: MealyMachine
	xi: tuple

	def __post_init__(self):
		if self.machine.input != self.monad.alphabet:
			raise InputException("Module machine must read the monad's alphabet", "$.machine.input")

		states = self.machine.states.size
		object.__setattr__(self, "xi", as_table(self.xi, self.monad.states.size, states, states, "$.xi"))

	@property
	def delta(self):
		return self.machine.d

	@property
	def sigma(self):
		return self.machine.s


@dataclass(frozen=True)
class BicrossedRepresentation:
	"""
	Representation of E⋈A* on a set P: an action alpha of E and an action
	beta of the letters of A
	"""
	carrier: FinSet
	alpha: tuple
	beta: tuple

	def __post_init__(self):
		for name in ("alpha", "beta"):
			table = getattr(self, name)
			if not isinstance(table, (list, tuple)):
				raise InputException("Expected a table", "$." + name)
			object.__setattr__(self, name, as_table(table, len(table), self.carrier.size, self.carrier.size, "$." + name))

	@property
	def state_count(self):
		return len(self.alpha)

	@property
	def alphabet_size(self):
		return len(self.beta)

	def act_word(self, word, element):
		"""
		β⁺(word, x), the head letter acting last
		"""
		for letter in reversed(word):
			element = self.beta[letter][element]

		return element


def regular_module(monad):
	"""
	The monad acting on itself by its multiplication

	:param DoubleMonad monad:
	:return ModuleStructure:
	"""
	return ModuleStructure(monad, monad.machine, monad.mu)


def module_cell(module):
	"""
	The action cell M;P → P, sending (e, p) to ξ(e, p)

	:param ModuleStructure module:
	:return Cell:
	"""
	composite = loose_compose(module.monad.machine, module.machine)
	size = module.machine.states.size
	return Cell(composite, module.machine, FinFun.identity(module.machine.input), FinFun.identity(module.machine.output),
				FinFun.from_callable(composite.states, module.machine.states, lambda index: module.xi[index // size][index % size]))


def check_module(module, bound=None):
	"""
	Check the module axioms

	In order: ξ(e0, p) = p (ax_3); ξ(μ(e, e'), p) = ξ(e, ξ(e', p)) (ax_4);
	σ(a, ξ(e, p)) = σ(s(a, e), p) (ax_1); δ(a, ξ(e, p)) =
	ξ(d(a, e), δ(s(a, e), p)) (ax_2). The last two are then checked for all
	words up to `bound` letters.

	:param ModuleStructure module:
	:param int bound:  Word length of the spot-check
	:return Verdict:
	"""
	bound = config.MODULE_WORD_BOUND if bound is None else bound
	monad, xi, delta, sigma = module.monad, module.xi, module.delta, module.sigma
	elements = list(module.machine.states)

	for p in elements:
		if xi[monad.e0][p] != p:
			return Verdict.fail("ax_3", p=p, lhs=xi[monad.e0][p], rhs=p)

	for e, e_prime in itertools.product(monad.states, repeat=2):
		product = monad.multiply(e, e_prime)
		if product is None:
			continue

		for p in elements:
			if xi[product][p] != xi[e][xi[e_prime][p]]:
				return Verdict.fail("ax_4", e=e, e_prime=e_prime, p=p, lhs=xi[product][p], rhs=xi[e][xi[e_prime][p]])

	for a in monad.alphabet:
		for e in monad.states:
			for p in elements:
				lhs, rhs = sigma[a][xi[e][p]], sigma[monad.s[a][e]][p]
				if lhs != rhs:
					return Verdict.fail("ax_1", a=a, e=e, p=p, lhs=lhs, rhs=rhs)

	for a in monad.alphabet:
		for e in monad.states:
			for p in elements:
				lhs, rhs = delta[a][xi[e][p]], xi[monad.d[a][e]][delta[monad.s[a][e]][p]]
				if lhs != rhs:
					return Verdict.fail("ax_2", a=a, e=e, p=p, lhs=lhs, rhs=rhs)

	for word in words(monad.alphabet.size, bound, min_length=2):
		for e in monad.states:
			acted, translated = extend_words(monad.machine, word, e)
			for p in elements:
				state, output = extend_words(module.machine, word, xi[e][p])
				shifted_state, shifted_output = extend_words(module.machine, translated, p)
				if output != shifted_output:
					return Verdict.fail("ax_1", word=word, e=e, p=p, lhs=output, rhs=shifted_output)

				if state != xi[acted][shifted_state]:
					return Verdict.fail("ax_2", word=word, e=e, p=p, lhs=state, rhs=xi[acted][shifted_state])

	return Verdict.ok()


def check_balanced(monad, machine, alpha):
	"""
	Check σ(a, α(e, p)) = σ(s(a, e), p), the part of the module axioms that
	involves the output table

	:return Verdict:
	"""
	for a in monad.alphabet:
		for e in monad.states:
			for p in machine.states:
				lhs, rhs = machine.s[a][alpha[e][p]], machine.s[monad.s[a][e]][p]
				if lhs != rhs:
					return Verdict.fail("ax_1", a=a, e=e, p=p, lhs=lhs, rhs=rhs)

	return Verdict.ok()


def _check_representation_boundaries(monad, representation):
	if representation.state_count != monad.states.size:
		raise InputException("Representation has %i rows for alpha, monad has %i states" % (
			representation.state_count, monad.states.size), "$.alpha")

	if representation.alphabet_size != monad.alphabet.size:
		raise InputException("Representation has %i rows for beta, monad has %i letters" % (
			representation.alphabet_size, monad.alphabet.size), "$.beta")


def check_matching_relation(monad, representation, bound=None):
	"""
	Check that a pair of actions represents E⋈A*

	In order: alpha is an action of E (unit, then compatibility), then the
	matching relation β⁺(w, α(h, x)) = α(w ⊗⁺ h, β⁺(w ⊙⁺ h, x)) for all words
	w up to `bound` letters.

	:param DoubleMonad monad:
	:param BicrossedRepresentation representation:
	:param int bound:
	:return Verdict:
	"""
	bound = config.WORD_BOUND if bound is None else bound
	_check_representation_boundaries(monad, representation)
	alpha, carrier = representation.alpha, list(representation.carrier)

	for x in carrier:
		if alpha[monad.e0][x] != x:
			return Verdict.fail("alpha-unit", x=x, lhs=alpha[monad.e0][x], rhs=x)

	for e, e_prime in itertools.product(monad.states, repeat=2):
		product = monad.multiply(e, e_prime)
		if product is None:
			continue

		for x in carrier:
			if alpha[product][x] != alpha[e][alpha[e_prime][x]]:
				return Verdict.fail("alpha-action", e=e, e_prime=e_prime, x=x, lhs=alpha[product][x], rhs=alpha[e][alpha[e_prime][x]])

	for word in words(monad.alphabet.size, bound):
		for h in monad.states:
			acted, translated = extend_words(monad.machine, word, h)
			for x in carrier:
				lhs = representation.act_word(word, alpha[h][x])
				rhs = alpha[acted][representation.act_word(translated, x)]
				if lhs != rhs:
					return Verdict.fail("matching", word=word, h=h, x=x, lhs=lhs, rhs=rhs)

	return Verdict.ok(bound=bound)


def module_to_action(module):
	"""
	Representation of E⋈A* given by a module: α := ξ and β := δ

	:param ModuleStructure module:
	:return BicrossedRepresentation:
	"""
	verdict = check_module(module)
	if not verdict:
		raise ViolationException("Not a module: fails %s" % verdict.law, verdict)

	return BicrossedRepresentation(module.machine.states, module.xi, module.delta)


def action_to_module(monad, representation, output, sigma):
	"""
	Module given by a representation and an output table σ

	σ is part of the machine P: A ⇸ X, not of the representation, so it has
	to be supplied; it must be balanced with respect to α.

	:param DoubleMonad monad:
	:param BicrossedRepresentation representation:
	:param FinSet output:  X
	:param sigma:  Table σ[a][p] into X
	:return ModuleStructure:
	"""
	verdict = check_matching_relation(monad, representation)
	if not verdict:
		raise ViolationException("Representation fails %s" % verdict.law, verdict)

	machine = MealyMachine(monad.alphabet, output, representation.carrier, representation.beta, sigma)
	verdict = check_balanced(monad, machine, representation.alpha)
	if not verdict:
		raise ViolationException("Output table is not balanced", verdict)

	return ModuleStructure(monad, machine, representation.alpha)


def module_action_convert(direction, payload):
	"""
	Convert between modules and representations

	:param str direction:  `to-action` or `to-module`
	:param payload:  A ModuleStructure for `to-action`; a tuple (monad,
	representation, output, sigma) for `to-module`
	:return:  BicrossedRepresentation or ModuleStructure
	"""
	if direction == "to-action":
		return module_to_action(payload)
	elif direction == "to-module":
		return action_to_module(*payload)

	raise InputException("Unknown direction '%s'; use 'to-action' or 'to-module'" % direction)


@dataclass(frozen=True)
class LooseMonadMap:
	"""
	Loose map of monads M → N: a machine U: A ⇸ B with states X and tables
	δ: E × X → X and σ: E × X → E'
	"""
	machine: MealyMachine
	delta: tuple
	sigma: tuple

	def __post_init__(self):
		states = self.machine.states.size
		if not isinstance(self.delta, (list, tuple)) or not isinstance(self.sigma, (list, tuple)):
			raise InputException("Expected tables for delta and sigma", "$")

		object.__setattr__(self, "delta", as_table(self.delta, len(self.delta), states, states, "$.delta"))
		object.__setattr__(self, "sigma", tuple(_as_state_row(row, states, "$.sigma[%i]" % index) for index, row in enumerate(self.sigma)))


def _as_state_row(row, length, path):
	"""
	Validate a row of target states; the bound is only known once the target
	monad is given
	"""
	if not isinstance(row, (list, tuple)) or len(row) != length:
		raise InputException("Expected a list of %i indices" % length, path)

	for index, entry in enumerate(row):
		if not is_index(entry) or entry < 0:
			raise InputException("Entry %s is not an index" % repr(entry), "%s[%i]" % (path, index))

	return tuple(int(entry) for entry in row)


def _check_loose_boundaries(source, target, loose):
	if loose.machine.input != source.alphabet:
		raise InputException("Machine must read the alphabet of the source monad", "$.machine.input")

	if loose.machine.output != target.alphabet:
		raise InputException("Machine must write the alphabet of the target monad", "$.machine.output")

	if len(loose.delta) != source.states.size:
		raise InputException("delta needs one row per state of the source monad", "$.delta")

	if len(loose.sigma) != source.states.size:
		raise InputException("sigma needs one row per state of the source monad", "$.sigma")

	for row_index, row in enumerate(loose.sigma):
		for column, value in enumerate(row):
			if value >= target.states.size:
				raise InputException("Entry %i is not a state of the target monad" % value, "$.sigma[%i][%i]" % (row_index, column))


def lambda_cell(source, target, loose):
	"""
	The cell λ: M;U → U;N sending (e, x) to (δ(e, x), σ(e, x))

	:return Cell:
	"""
	_check_loose_boundaries(source, target, loose)
	top = loose_compose(source.machine, loose.machine)
	bottom = loose_compose(loose.machine, target.machine)
	width = loose.machine.states.size

	def image(index):
		e, x = unpair_index(index, width)
		return pair_index(loose.delta[e][x], loose.sigma[e][x], target.states.size)

	return Cell(top, bottom, FinFun.identity(source.alphabet), FinFun.identity(target.alphabet),
				FinFun.from_callable(top.states, bottom.states, image))


def check_loose_monad_map(source, target, loose, fugality_only=False):
	"""
	Check the equations of a loose monad map

	In order: dl_2 (units), dl_3.1 (δ respects μ), dl_3.2 (fugality of σ)
	and dl_1 (λ is a cell). With `fugality_only`, only dl_3.2 is checked.

	:param DoubleMonad source:  M on A
	:param DoubleMonad target:  N on B
	:param LooseMonadMap loose:
	:param bool fugality_only:
	:return Verdict:
	"""
	_check_loose_boundaries(source, target, loose)
	delta, sigma, machine = loose.delta, loose.sigma, loose.machine
	elements = list(machine.states)

	def fugality():
		for e, e_prime in itertools.product(source.states, repeat=2):
			product = source.multiply(e, e_prime)
			if product is None:
				continue

			for x in elements:
				lhs = sigma[product][x]
				rhs = target.multiply(sigma[e][delta[e_prime][x]], sigma[e_prime][x])
				if lhs != rhs:
					return Verdict.fail("dl_3.2", e=e, e_prime=e_prime, x=x, lhs=lhs, rhs=rhs)

		return Verdict.ok()

	if fugality_only:
		return fugality()

	for x in elements:
		if delta[source.e0][x] != x:
			return Verdict.fail("dl_2", equation="delta", x=x, lhs=delta[source.e0][x], rhs=x)
		if sigma[source.e0][x] != target.e0:
			return Verdict.fail("dl_2", equation="sigma", x=x, lhs=sigma[source.e0][x], rhs=target.e0)

	for e, e_prime in itertools.product(source.states, repeat=2):
		product = source.multiply(e, e_prime)
		if product is None:
			continue

		for x in elements:
			if delta[product][x] != delta[e][delta[e_prime][x]]:
				return Verdict.fail("dl_3.1", e=e, e_prime=e_prime, x=x, lhs=delta[product][x], rhs=delta[e][delta[e_prime][x]])

	verdict = fugality()
	if not verdict:
		return verdict

	for a in source.alphabet:
		for e in source.states:
			for x in elements:
				moved = delta[e][x]
				lhs = target.s[machine.s[a][moved]][sigma[e][x]]
				rhs = machine.s[source.s[a][e]][x]
				if lhs != rhs:
					return Verdict.fail("dl_1", equation="output", a=a, e=e, x=x, lhs=lhs, rhs=rhs)

				next_source, next_machine = source.d[a][e], machine.d[source.s[a][e]][x]
				lhs, rhs = delta[next_source][next_machine], machine.d[a][moved]
				if lhs != rhs:
					return Verdict.fail("dl_1", equation="delta", a=a, e=e, x=x, lhs=lhs, rhs=rhs)

				lhs, rhs = sigma[next_source][next_machine], target.d[machine.s[a][moved]][sigma[e][x]]
				if lhs != rhs:
					return Verdict.fail("dl_1", equation="sigma", a=a, e=e, x=x, lhs=lhs, rhs=rhs)

	return Verdict.ok()
