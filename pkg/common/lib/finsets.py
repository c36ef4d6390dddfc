"""
Finite sets, functions between them, and their limits and colimits

Elements of a finite set of size n are the indices 0..n-1; labels are only
used for display. All values are immutable.
"""
import itertools

from dataclasses import dataclass, field
from typing import NamedTuple

import networkx as nx
import numpy as np

from common.lib.exceptions import InputException, ConstructionException
from common.lib.verdict import Verdict


def is_index(value):
	"""
	Whether a value can be used as an element index

	Booleans are ints in Python but never valid indices here.

	:param value:  Value to test
	:return bool:
	"""
	return isinstance(value, (int, np.integer)) and not isinstance(value, (bool, np.bool_))


def as_vector(table, length, bound, path="$", undefined=False):
	"""
	Validate a one-dimensional lookup table

	:param table:  Sequence of indices
	:param int length:  Expected length
	:param int bound:  Entries must be smaller than this
	:param str path:  Location of the table, used in error messages
	:param bool undefined:  Whether -1 is allowed as 'undefined'
	:return tuple:  The table as a tuple of ints
	"""
	if not isinstance(table, (list, tuple)):
		raise InputException("Expected a list of %i indices" % length, path)

	if len(table) != length:
		raise InputException("Expected %i entries, got %i" % (length, len(table)), path)

	for index, entry in enumerate(table):
		if not is_index(entry) or not (0 <= entry < bound or (undefined and entry == -1)):
			raise InputException("Entry %s is not an index below %i" % (repr(entry), bound), "%s[%i]" % (path, index))

	return tuple(int(entry) for entry in table)


def as_table(table, rows, columns, bound, path="$", undefined=False):
	"""
	Validate a two-dimensional lookup table

	:param table:  Sequence of rows of indices
	:param int rows:  Expected amount of rows
	:param int columns:  Expected length of each row
	:param int bound:  Entries must be smaller than this
	:param str path:  Location of the table, used in error messages
	:param bool undefined:  Whether -1 is allowed as 'undefined'
	:return tuple:  The table as a tuple of tuples of ints
	"""
	if not isinstance(table, (list, tuple)):
		raise InputException("Expected a table with %i rows" % rows, path)

	if len(table) != rows:
		raise InputException("Expected %i rows, got %i" % (rows, len(table)), path)

	return tuple(as_vector(row, columns, bound, "%s[%i]" % (path, index), undefined) for index, row in enumerate(table))


@dataclass(frozen=True)
class FinSet:
	"""
	Finite set {0, ..., size - 1}
	"""
	size: int
	labels: tuple = field(default=None, compare=False)

	def __post_init__(self):
		if not is_index(self.size) or self.size < 0:
			raise InputException("Size must be a non-negative integer", "$.size")
		object.__setattr__(self, "size", int(self.size))

		if self.labels is not None:
			if not isinstance(self.labels, (list, tuple)):
				raise InputException("Labels must be a list", "$.labels")

			labels = tuple(self.labels)
			if len(labels) != self.size:
				raise InputException("Expected %i labels, got %i" % (self.size, len(labels)), "$.labels")

			if len(set(labels)) != len(labels):
				raise InputException("Labels must be pairwise distinct", "$.labels")

			object.__setattr__(self, "labels", labels)

	def __len__(self):
		return self.size

	def __iter__(self):
		return iter(range(self.size))

	def __contains__(self, element):
		return is_index(element) and 0 <= element < self.size

	def label(self, element):
		"""
		Display name of an element

		:param int element:  Element index
		:return str:
		"""
		return str(self.labels[element]) if self.labels else str(element)

	@classmethod
	def empty(cls):
		return cls(0)

	@classmethod
	def singleton(cls):
		return cls(1)


@dataclass(frozen=True)
class FinFun:
	"""
	Function between finite sets, as a table of codomain indices
	"""
	dom: FinSet
	cod: FinSet
	table: tuple

	def __post_init__(self):
		object.__setattr__(self, "table", as_vector(self.table, self.dom.size, self.cod.size, "$.table"))

	def __call__(self, element):
		return self.table[element]

	@classmethod
	def identity(cls, carrier):
		return cls(carrier, carrier, tuple(range(carrier.size)))

	@classmethod
	def constant(cls, dom, cod, value):
		return cls(dom, cod, (value,) * dom.size)

	@classmethod
	def from_callable(cls, dom, cod, function):
		"""
		Tabulate a Python callable

		:param FinSet dom:  Domain
		:param FinSet cod:  Codomain
		:param callable function:  Function from indices to indices
		:return FinFun:
		"""
		return cls(dom, cod, tuple(function(element) for element in dom))

	def after(self, other):
		"""
		Composite `self ∘ other`

		:param FinFun other:  Function to apply first
		:return FinFun:
		"""
		if other.cod != self.dom:
			raise InputException("Cannot compose: codomain of size %i does not match domain of size %i" % (other.cod.size, self.dom.size))

		return FinFun(other.dom, self.cod, tuple(self.table[value] for value in other.table))

	def then(self, other):
		"""
		Composite `other ∘ self`

		:param FinFun other:  Function to apply second
		:return FinFun:
		"""
		return other.after(self)

	def image(self):
		return sorted(set(self.table))

	def is_injective(self):
		return len(set(self.table)) == self.dom.size

	def is_surjective(self):
		return len(set(self.table)) == self.cod.size

	def is_bijective(self):
		return self.dom.size == self.cod.size and self.is_injective()

	def inverse(self):
		"""
		Inverse of a bijection

		:return FinFun:
		"""
		if not self.is_bijective():
			raise InputException("Function is not a bijection and has no inverse")

		table = [0] * self.cod.size
		for element, value in enumerate(self.table):
			table[value] = element

		return FinFun(self.cod, self.dom, tuple(table))


class Product(NamedTuple):
	carrier: FinSet
	first: FinFun
	second: FinFun


class Coproduct(NamedTuple):
	carrier: FinSet
	left: FinFun
	right: FinFun


class Pullback(NamedTuple):
	carrier: FinSet
	first: FinFun
	second: FinFun
	pairs: tuple


class Equalizer(NamedTuple):
	carrier: FinSet
	inclusion: FinFun


class Coequalizer(NamedTuple):
	carrier: FinSet
	quotient: FinFun
	classes: tuple


def compose(*functions):
	"""
	Composite of functions, in the usual right-to-left order

	`compose(h, g, f)` is `h ∘ g ∘ f`.

	:return FinFun:
	"""
	result = functions[-1]
	for function in reversed(functions[:-1]):
		result = function.after(result)

	return result


def all_functions(dom, cod):
	"""
	All functions between two finite sets

	Functions are yielded in lexicographic order of their tables.

	:param FinSet dom:  Domain
	:param FinSet cod:  Codomain
	:return:  Generator of FinFun
	"""
	for table in itertools.product(range(cod.size), repeat=dom.size):
		yield FinFun(dom, cod, table)


def all_surjections(dom, cod):
	"""
	All surjective functions between two finite sets, in table order

	:param FinSet dom:  Domain
	:param FinSet cod:  Codomain
	:return:  Generator of FinFun
	"""
	return (function for function in all_functions(dom, cod) if function.is_surjective())


def pair_index(first, second, second_size):
	"""
	Index of a pair in a product, in lexicographic order

	:param int first:  First component
	:param int second:  Second component
	:param int second_size:  Size of the second factor
	:return int:
	"""
	return first * second_size + second


def unpair_index(index, second_size):
	"""
	Components of a product element

	:param int index:  Element of the product
	:param int second_size:  Size of the second factor
	:return tuple:  (first, second)
	"""
	return divmod(index, second_size)


def terminal():
	return FinSet.singleton()


def bang(carrier):
	"""
	The unique function into the terminal set

	:param FinSet carrier:  Domain
	:return FinFun:
	"""
	return FinFun.constant(carrier, terminal(), 0)


def product(first, second):
	"""
	Cartesian product, elements ordered lexicographically

	:param FinSet first:
	:param FinSet second:
	:return Product:  Carrier with its two projections
	"""
	carrier = FinSet(first.size * second.size)
	return Product(
		carrier,
		FinFun.from_callable(carrier, first, lambda index: unpair_index(index, second.size)[0]),
		FinFun.from_callable(carrier, second, lambda index: unpair_index(index, second.size)[1])
	)


def product_map(first, second):
	"""
	Product of two functions, `first × second`

	:param FinFun first:
	:param FinFun second:
	:return FinFun:
	"""
	dom = FinSet(first.dom.size * second.dom.size)
	cod = FinSet(first.cod.size * second.cod.size)
	table = [pair_index(first(x), second(y), second.cod.size) for x in first.dom for y in second.dom]
	return FinFun(dom, cod, tuple(table))


def coproduct(left, right):
	"""
	Disjoint union; the elements of `left` come first

	:param FinSet left:
	:param FinSet right:
	:return Coproduct:  Carrier with its two injections
	"""
	carrier = FinSet(left.size + right.size)
	return Coproduct(
		carrier,
		FinFun(left, carrier, tuple(range(left.size))),
		FinFun(right, carrier, tuple(range(left.size, left.size + right.size)))
	)


def _check_parallel(f, g):
	if f.dom != g.dom or f.cod != g.cod:
		raise InputException("Functions must share domain and codomain (got %i→%i and %i→%i)" % (
			f.dom.size, f.cod.size, g.dom.size, g.cod.size))


def equalizer(f, g):
	"""
	Subset of the domain on which two functions agree

	:param FinFun f:
	:param FinFun g:
	:return Equalizer:
	"""
	_check_parallel(f, g)
	elements = tuple(element for element in f.dom if f(element) == g(element))
	carrier = FinSet(len(elements))
	return Equalizer(carrier, FinFun(carrier, f.dom, elements))


def pullback(f, g):
	"""
	Pullback of a cospan `A --f--> Z <--g-- B`

	The carrier enumerates all pairs (x, y) with f(x) = g(y), ordered
	lexicographically.

	:param FinFun f:
	:param FinFun g:
	:return Pullback:  Carrier, the two projections and the list of pairs
	"""
	if f.cod != g.cod:
		raise InputException("Cannot take pullback: codomains of size %i and %i differ" % (f.cod.size, g.cod.size))

	pairs = tuple((x, y) for x in f.dom for y in g.dom if f(x) == g(y))
	carrier = FinSet(len(pairs))
	first = FinFun(carrier, f.dom, tuple(pair[0] for pair in pairs))
	second = FinFun(carrier, g.dom, tuple(pair[1] for pair in pairs))

	if f.after(first) != g.after(second):
		raise ConstructionException("Pullback square does not commute")

	return Pullback(carrier, first, second, pairs)


def coequalizer(f, g):
	"""
	Coequalizer of two parallel functions

	The quotient classes are the connected components of the relation
	f(x) ~ g(x) on the codomain; classes are numbered in order of their
	smallest element.

	:param FinFun f:
	:param FinFun g:
	:return Coequalizer:  Quotient set, quotient map and the classes
	"""
	_check_parallel(f, g)

	relation = nx.Graph()
	relation.add_nodes_from(f.cod)
	relation.add_edges_from(zip(f.table, g.table))

	classes = tuple(tuple(sorted(component)) for component in sorted(nx.connected_components(relation), key=min))
	table = [0] * f.cod.size
	for index, members in enumerate(classes):
		for member in members:
			table[member] = index

	carrier = FinSet(len(classes))
	quotient = FinFun(f.cod, carrier, tuple(table))
	if quotient.after(f) != quotient.after(g):
		raise ConstructionException("Quotient map does not coequalize")

	return Coequalizer(carrier, quotient, classes)


def check_pullback_universal(f, g, max_size=2):
	"""
	Verify the universal property of `pullback(f, g)` by enumeration

	For every test set W of size up to `max_size` and every pair of
	functions a: W → A, b: W → B with f∘a = g∘b, exactly one h: W → P may
	satisfy pA∘h = a and pB∘h = b.

	:param FinFun f:
	:param FinFun g:
	:param int max_size:  Largest test set
	:return Verdict:
	"""
	carrier, first, second, pairs = pullback(f, g)
	for size in range(max_size + 1):
		test = FinSet(size)
		for a in all_functions(test, f.dom):
			for b in all_functions(test, g.dom):
				if f.after(a) != g.after(b):
					continue

				count = sum(1 for h in all_functions(test, carrier) if first.after(h) == a and second.after(h) == b)
				if count != 1:
					return Verdict.fail("pullback-universal", test_size=size, a=a.table, b=b.table, factorizations=count)

	return Verdict.ok(max_size=max_size)


def check_coequalizer_universal(f, g, max_size=None):
	"""
	Verify the universal property of `coequalizer(f, g)` by enumeration

	For every test set Y of size up to `max_size` and every h: Z → Y with
	h∘f = h∘g, exactly one h' may satisfy h'∘q = h.

	:param FinFun f:
	:param FinFun g:
	:param int max_size:  Largest test set; defaults to the size of the
	codomain
	:return Verdict:
	"""
	carrier, quotient, classes = coequalizer(f, g)
	max_size = f.cod.size if max_size is None else max_size
	for size in range(max_size + 1):
		test = FinSet(size)
		for h in all_functions(f.cod, test):
			if h.after(f) != h.after(g):
				continue

			count = sum(1 for factor in all_functions(carrier, test) if factor.after(quotient) == h)
			if count != 1:
				return Verdict.fail("coequalizer-universal", test_size=size, h=h.table, factorizations=count)

	return Verdict.ok(max_size=max_size)
