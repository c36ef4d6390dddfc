"""
Finite monoids, words, monoid actions, matched pairs and the bicrossed
product E⋈A*

Words are tuples of letter indices. The extension of d to words lets the
head letter act last: d⁺(a::as, e) = d(a, d⁺(as, e)).
"""
import itertools

from dataclasses import dataclass

import numpy as np

from common.lib.exceptions import InputException
from common.lib.finsets import FinSet, as_table, is_index
from common.lib.verdict import Verdict


def words(alphabet_size, max_length, min_length=0):
	"""
	All words over an alphabet, in shortlex order

	:param int alphabet_size:  Amount of letters
	:param int max_length:  Longest word to yield
	:param int min_length:  Shortest word to yield
	:return:  Generator of tuples
	"""
	for length in range(min_length, max_length + 1):
		yield from itertools.product(range(alphabet_size), repeat=length)


def as_word(word, alphabet_size, path="$"):
	"""
	Validate a word

	:param word:  Sequence of letter indices
	:param int alphabet_size:  Size of the alphabet
	:param str path:  Location of the word, used in error messages
	:return tuple:
	"""
	if not isinstance(word, (list, tuple)):
		raise InputException("A word must be a list of letter indices", path)

	for index, letter in enumerate(word):
		if not is_index(letter) or not 0 <= letter < alphabet_size:
			raise InputException("Letter %s is not an index below %i" % (repr(letter), alphabet_size), "%s[%i]" % (path, index))

	return tuple(int(letter) for letter in word)


def extend_tables(d, s, word, state):
	"""
	Canonical extensions of a pair of tables to words

	Computes (word ⊗⁺ state, word ⊙⁺ state) following

	    d⁺([], e) = e          d⁺(a::as, e) = d(a, d⁺(as, e))
	    [] ⊙⁺ e = []           (a::as) ⊙⁺ e = s(a, as ⊗⁺ e) :: (as ⊙⁺ e)

	which amounts to running the tables over the reversed word.

	:param d:  Table d[a][e]
	:param s:  Table s[a][e]
	:param tuple word:  Word of letters
	:param int state:  Starting state
	:return tuple:  (state, word)
	"""
	emitted = []
	for letter in reversed(word):
		emitted.append(s[letter][state])
		state = d[letter][state]

	return state, tuple(reversed(emitted))


@dataclass(frozen=True)
class FinMonoid:
	"""
	Finite monoid given by its Cayley table
	"""
	carrier: FinSet
	unit: int
	mult: tuple

	def __post_init__(self):
		if self.carrier.size < 1:
			raise InputException("A monoid needs at least its unit", "$.carrier")

		if not is_index(self.unit) or self.unit not in self.carrier:
			raise InputException("Unit must be an element of the carrier", "$.unit")

		object.__setattr__(self, "mult", as_table(self.mult, self.carrier.size, self.carrier.size, self.carrier.size, "$.mult"))

	def __call__(self, x, y):
		return self.mult[x][y]

	def power(self, element, exponent):
		"""
		`element` multiplied with itself `exponent` times

		:param int element:
		:param int exponent:  Non-negative exponent
		:return int:
		"""
		result = self.unit
		for _ in range(exponent):
			result = self.mult[result][element]

		return result

	@classmethod
	def trivial(cls):
		return cls(FinSet.singleton(), 0, ((0,),))

	@classmethod
	def cyclic(cls, order):
		"""
		Cyclic group Z/order under addition

		:param int order:
		:return FinMonoid:
		"""
		return cls(FinSet(order), 0, tuple(tuple((x + y) % order for y in range(order)) for x in range(order)))


def check_monoid_laws(monoid):
	"""
	Check associativity and both unit laws

	Associativity is checked first, over all triples in lexicographic order;
	then the left and right unit laws.

	:param FinMonoid monoid:
	:return Verdict:  On failure, law is one of `associativity`,
	`left-unit`, `right-unit`
	"""
	mult = np.array(monoid.mult, dtype=np.intp)
	size = monoid.carrier.size

	# lhs[x, y, z] = (x·y)·z, rhs[x, y, z] = x·(y·z)
	lhs = mult[mult]
	rhs = mult[np.arange(size)[:, None, None], mult[None, :, :]]
	violations = np.argwhere(lhs != rhs)
	if len(violations):
		x, y, z = (int(value) for value in violations[0])
		return Verdict.fail("associativity", triple=[x, y, z], lhs=int(lhs[x, y, z]), rhs=int(rhs[x, y, z]))

	for x in monoid.carrier:
		if mult[monoid.unit, x] != x:
			return Verdict.fail("left-unit", element=x, lhs=int(mult[monoid.unit, x]), rhs=x)

	for x in monoid.carrier:
		if mult[x, monoid.unit] != x:
			return Verdict.fail("right-unit", element=x, lhs=int(mult[x, monoid.unit]), rhs=x)

	return Verdict.ok()


@dataclass(frozen=True)
class MonoidAction:
	"""
	Action of a finite monoid on a finite set

	`act[m][x]` is the action of m on x. For a left action
	act(m·m', x) = act(m, act(m', x)); for a right action the result of
	acting with m·m' is that of acting with m first, then with m'.
	"""
	monoid: FinMonoid
	set: FinSet
	act: tuple
	side: str = "left"

	def __post_init__(self):
		if self.side not in ("left", "right"):
			raise InputException("Side must be 'left' or 'right'", "$.side")

		object.__setattr__(self, "act", as_table(self.act, self.monoid.carrier.size, self.set.size, self.set.size, "$.act"))


def check_action_laws(action):
	"""
	Check that the unit acts trivially and that acting is compatible with
	multiplication

	:param MonoidAction action:
	:return Verdict:  On failure, law is `action-unit` or `action-compatibility`
	"""
	monoid, act = action.monoid, action.act
	for x in action.set:
		if act[monoid.unit][x] != x:
			return Verdict.fail("action-unit", element=x, lhs=act[monoid.unit][x], rhs=x)

	for m in monoid.carrier:
		for n in monoid.carrier:
			for x in action.set:
				lhs = act[monoid(m, n)][x]
				rhs = act[m][act[n][x]] if action.side == "left" else act[n][act[m][x]]
				if lhs != rhs:
					return Verdict.fail("action-compatibility", m=m, n=n, element=x, lhs=lhs, rhs=rhs)

	return Verdict.ok()


@dataclass(frozen=True)
class BicrossedElement:
	"""
	Element (e, w) of E⋈A*
	"""
	e: int
	w: tuple

	def __post_init__(self):
		object.__setattr__(self, "w", tuple(self.w))


@dataclass(frozen=True)
class MatchedPair:
	"""
	A monoid E and an alphabet A acting on each other

	The tables d: A×E → E and s: A×E → A generate the left action ⊗⁺ of A*
	on E and the action ⊙⁺ of E on A*.
	"""
	monoid: FinMonoid
	alphabet: FinSet
	d: tuple
	s: tuple

	def __post_init__(self):
		states = self.monoid.carrier.size
		object.__setattr__(self, "d", as_table(self.d, self.alphabet.size, states, states, "$.d"))
		object.__setattr__(self, "s", as_table(self.s, self.alphabet.size, states, self.alphabet.size, "$.s"))

	@property
	def unit(self):
		return self.monoid.unit

	def act(self, word, state):
		"""
		word ⊗⁺ state
		"""
		for letter in reversed(word):
			state = self.d[letter][state]

		return state

	def translate(self, word, state):
		"""
		word ⊙⁺ state
		"""
		return extend_tables(self.d, self.s, word, state)[1]

	def extend(self, word, state):
		"""
		(word ⊗⁺ state, word ⊙⁺ state) in one pass
		"""
		return extend_tables(self.d, self.s, word, state)

	def validate_element(self, element, path="$"):
		"""
		Make sure a bicrossed element is indexed over this pair

		:param BicrossedElement element:
		:param str path:  Location of the element, used in error messages
		:return BicrossedElement:
		"""
		if not is_index(element.e) or element.e not in self.monoid.carrier:
			raise InputException("State %s is not an element of E" % repr(element.e), path + ".e")

		as_word(element.w, self.alphabet.size, path + ".w")
		return element


def check_bicrossed_equations(pair, bound):
	"""
	Check that a matched pair satisfies the bicrossed equations

	In order: the monoid laws of E; the unit e0 is a fixpoint of ⊗⁺ and
	leaves words unchanged under ⊙⁺; the multiplicative equation
	as⊗⁺(e·e′) = (as⊗⁺e)·((as⊙⁺e)⊗⁺e′); ⊙⁺ is an action of E,
	w⊙⁺(e·e′) = (w⊙⁺e)⊙⁺e′; and the concatenation equation
	(as⌢bs)⊙⁺e = (as⊙⁺(bs⊗⁺e))⌢(bs⊙⁺e). Words range over all words of
	length up to `bound`, in shortlex order.

	:param MatchedPair pair:
	:param int bound:  Longest word to check
	:return Verdict:
	"""
	if bound < 0:
		raise InputException("Word bound must be non-negative")

	monoid = pair.monoid
	states = list(monoid.carrier)
	bounded = list(words(pair.alphabet.size, bound))

	monoid_verdict = check_monoid_laws(monoid)
	if not monoid_verdict:
		return monoid_verdict

	for word in bounded:
		state, translated = pair.extend(word, monoid.unit)
		if state != monoid.unit:
			return Verdict.fail("unit-fixpoint-d", word=word, lhs=state, rhs=monoid.unit)
		if translated != word:
			return Verdict.fail("unit-fixpoint-s", word=word, lhs=translated, rhs=word)

	for word in bounded:
		for e in states:
			acted, translated = pair.extend(word, e)
			for e_prime in states:
				lhs = pair.act(word, monoid(e, e_prime))
				rhs = monoid(acted, pair.act(translated, e_prime))
				if lhs != rhs:
					return Verdict.fail("bicrossed-d", word=word, e=e, e_prime=e_prime, lhs=lhs, rhs=rhs)

	for word in bounded:
		for e in states:
			for e_prime in states:
				lhs = pair.translate(word, monoid(e, e_prime))
				rhs = pair.translate(pair.translate(word, e), e_prime)
				if lhs != rhs:
					return Verdict.fail("translate-action", word=word, e=e, e_prime=e_prime, lhs=lhs, rhs=rhs)

	for left in bounded:
		for right in bounded:
			for e in states:
				acted, translated = pair.extend(right, e)
				lhs = pair.translate(left + right, e)
				rhs = pair.translate(left, acted) + translated
				if lhs != rhs:
					return Verdict.fail("bicrossed-s", left=left, right=right, e=e, lhs=lhs, rhs=rhs)

	return Verdict.ok(bound=bound)


def bicrossed_unit(pair):
	return BicrossedElement(pair.monoid.unit, ())


def bicrossed_multiply(x, y, pair):
	"""
	Product in E⋈A*

	(x, as) • (y, bs) = (x · (as ⊗⁺ y), (as ⊙⁺ y) ⌢ bs)

	:param BicrossedElement x:
	:param BicrossedElement y:
	:param MatchedPair pair:
	:return BicrossedElement:
	"""
	pair.validate_element(x, "$.left")
	pair.validate_element(y, "$.right")

	acted, translated = pair.extend(x.w, y.e)
	return BicrossedElement(pair.monoid(x.e, acted), translated + y.w)


def bicrossed_elements(pair, max_length):
	"""
	All elements (e, w) with |w| ≤ max_length

	Ordered by state first, then word in shortlex order.

	:param MatchedPair pair:
	:param int max_length:
	:return list:
	"""
	return [BicrossedElement(e, word) for e in pair.monoid.carrier for word in words(pair.alphabet.size, max_length)]


def check_bicrossed_product(pair, bound):
	"""
	Check that • is unital and associative on the bounded fragment

	Unitality is checked on all elements with words up to `bound`;
	associativity on all triples whose words have total length up to `bound`.

	:param MatchedPair pair:
	:param int bound:
	:return Verdict:
	"""
	unit = bicrossed_unit(pair)
	elements = bicrossed_elements(pair, bound)
	for x in elements:
		for product, side in ((bicrossed_multiply(unit, x, pair), "left"), (bicrossed_multiply(x, unit, pair), "right")):
			if product != x:
				return Verdict.fail("bicrossed-unit", side=side, element=_element_json(x), lhs=_element_json(product), rhs=_element_json(x))

	for x in elements:
		for y in elements:
			if len(x.w) + len(y.w) > bound:
				continue

			xy = bicrossed_multiply(x, y, pair)
			for z in elements:
				if len(x.w) + len(y.w) + len(z.w) > bound:
					continue

				lhs = bicrossed_multiply(xy, z, pair)
				rhs = bicrossed_multiply(x, bicrossed_multiply(y, z, pair), pair)
				if lhs != rhs:
					return Verdict.fail("bicrossed-associativity", triple=[_element_json(x), _element_json(y), _element_json(z)],
										lhs=_element_json(lhs), rhs=_element_json(rhs))

	return Verdict.ok(bound=bound)


def bicrossed_cayley(pair, bound):
	"""
	Partial Cayley table of the bounded fragment of E⋈A*

	:param MatchedPair pair:
	:param int bound:  Longest word of the fragment
	:return tuple:  (elements, table) where table[i][j] is the index of the
	product of elements i and j, or -1 if the product leaves the fragment
	"""
	elements = bicrossed_elements(pair, bound)
	index = {element: position for position, element in enumerate(elements)}
	table = np.full((len(elements), len(elements)), -1, dtype=int)
	for i, x in enumerate(elements):
		for j, y in enumerate(elements):
			if len(x.w) + len(y.w) <= bound:
				table[i, j] = index[bicrossed_multiply(x, y, pair)]

	return elements, table


def bicrossed_cospan_relations(pair, bound):
	"""
	Check the relations between E⋈A* and the injections of its factors

	With i_E(e) = (e, ε) and i_W(w) = (e0, w): i_W(w) • i_E(e) equals
	(w ⊗⁺ e, w ⊙⁺ e), i_E(e) • i_W(w) equals (e, w), and both injections are
	monoid homomorphisms.

	:param MatchedPair pair:
	:param int bound:  Longest word to check
	:return Verdict:
	"""
	monoid = pair.monoid
	bounded = list(words(pair.alphabet.size, bound))

	def inject_state(e):
		return BicrossedElement(e, ())

	def inject_word(word):
		return BicrossedElement(monoid.unit, word)

	for word in bounded:
		for e in monoid.carrier:
			product = bicrossed_multiply(inject_word(word), inject_state(e), pair)
			expected = BicrossedElement(*pair.extend(word, e))
			if product != expected:
				return Verdict.fail("cospan-word-then-state", word=word, e=e, lhs=_element_json(product), rhs=_element_json(expected))

			product = bicrossed_multiply(inject_state(e), inject_word(word), pair)
			if product != BicrossedElement(e, word):
				return Verdict.fail("cospan-state-then-word", word=word, e=e, lhs=_element_json(product), rhs=[e, list(word)])

	for e in monoid.carrier:
		for e_prime in monoid.carrier:
			product = bicrossed_multiply(inject_state(e), inject_state(e_prime), pair)
			if product != inject_state(monoid(e, e_prime)):
				return Verdict.fail("state-injection-hom", e=e, e_prime=e_prime, lhs=_element_json(product), rhs=[monoid(e, e_prime), []])

	for left in bounded:
		for right in bounded:
			product = bicrossed_multiply(inject_word(left), inject_word(right), pair)
			if product != inject_word(left + right):
				return Verdict.fail("word-injection-hom", left=left, right=right, lhs=_element_json(product), rhs=[monoid.unit, list(left + right)])

	return Verdict.ok(bound=bound)


def _element_json(element):
	return [element.e, list(element.w)]
