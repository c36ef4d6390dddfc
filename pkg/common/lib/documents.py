"""
JSON documents describing workbench objects

One document describes one object and names its type in a "kind" field; a
JSON array of documents is a bundle and parses to a list. Nested documents
may omit their kind, and finite sets may be given as a bare size. Errors are
raised as InputException with the path of the offending field, e.g.
`$.machine.d[1][0]`.
"""
import json
import sys

from contextlib import contextmanager
from functools import singledispatch
from typing import NamedTuple

import config

from common.lib.exceptions import InputException
from common.lib.finsets import FinSet, FinFun, as_table, as_vector, is_index
from common.lib.mealy import MealyMachine, Cell
from common.lib.monoids import FinMonoid, MonoidAction, MatchedPair, BicrossedElement, as_word
from common.lib.verdict import Verdict
from common.lib.monads import (DoubleMonad, ModuleStructure, BicrossedRepresentation, TightMonadMorphism,
							   LooseMonadMap)

REQUIRED = object()


class DocumentException(InputException):
	"""
	Input error whose path is already relative to the document root
	"""
	pass


class RepresentationDocument(NamedTuple):
	representation: BicrossedRepresentation
	output: FinSet = None
	sigma: tuple = None


class MonadMapDocument(NamedTuple):
	source: DoubleMonad
	target: DoubleMonad
	map: object


@contextmanager
def located(path):
	"""
	Re-anchor paths of input errors raised by object constructors

	Constructors report paths relative to the object they build (`$.d[1][0]`);
	within this context they are rewritten relative to `path`.
	"""
	try:
		yield
	except DocumentException:
		raise
	except InputException as e:
		raise DocumentException(str(e), path + e.path[1:]) from None


def field(document, name, path, default=REQUIRED):
	"""
	Get a field of a document

	:param dict document:
	:param str name:  Field name
	:param str path:  Path of the document
	:param default:  Value if the field is absent; if not given, the field is
	required
	:return:
	"""
	if name not in document:
		if default is REQUIRED:
			raise DocumentException("missing field '%s'" % name, "%s.%s" % (path, name))
		return default

	return document[name]


def _check_kind(document, kind, path, nested):
	if not isinstance(document, dict):
		raise DocumentException("Expected a %s document" % kind, path)

	if "kind" in document and document["kind"] != kind:
		raise DocumentException("Expected a document of kind '%s', got '%s'" % (kind, document["kind"]), path + ".kind")

	if "kind" not in document and not nested:
		raise DocumentException("missing field 'kind'", path + ".kind")


def decode_finset(value, path="$", nested=True):
	if not isinstance(value, dict):
		if not is_index(value) or value < 0:
			raise DocumentException("Expected a set size or a finset document", path)
		return FinSet(int(value))

	_check_kind(value, "finset", path, nested)
	with located(path):
		return FinSet(field(value, "size", path), value.get("labels"))


def _table(value, path):
	if not isinstance(value, (list, tuple)):
		raise DocumentException("Expected a table", path)
	return value


def decode_function(value, dom, cod, path):
	"""
	A tight function whose domain and codomain are known from context: either
	its table, or a finfun document
	"""
	if isinstance(value, dict):
		function = decode_finfun(value, path)
		if function.dom != dom or function.cod != cod:
			raise DocumentException("Function must run from a set of size %i to one of size %i" % (dom.size, cod.size), path)
		return function

	return FinFun(dom, cod, as_vector(value, dom.size, cod.size, path))


def decode_finfun(document, path="$", nested=True):
	_check_kind(document, "finfun", path, nested)
	dom = decode_finset(field(document, "dom", path), path + ".dom")
	cod = decode_finset(field(document, "cod", path), path + ".cod")
	with located(path):
		return FinFun(dom, cod, field(document, "table", path))


def decode_monoid(document, path="$", nested=True):
	_check_kind(document, "monoid", path, nested)
	carrier = decode_finset(field(document, "carrier", path), path + ".carrier")
	with located(path):
		return FinMonoid(carrier, field(document, "unit", path), field(document, "mult", path))


def decode_action(document, path="$", nested=True):
	_check_kind(document, "action", path, nested)
	monoid = decode_monoid(field(document, "monoid", path), path + ".monoid")
	carrier = decode_finset(field(document, "set", path), path + ".set")
	with located(path):
		return MonoidAction(monoid, carrier, field(document, "act", path), document.get("side", "left"))


def decode_machine(document, path="$", nested=True):
	_check_kind(document, "machine", path, nested)
	input = decode_finset(field(document, "input", path), path + ".input")
	output = decode_finset(field(document, "output", path), path + ".output")
	states = decode_finset(field(document, "states", path), path + ".states")
	with located(path):
		return MealyMachine(input, output, states, field(document, "d", path), field(document, "s", path))


def decode_cell(document, path="$", nested=True):
	_check_kind(document, "cell", path, nested)
	top = decode_machine(field(document, "top", path), path + ".top")
	bottom = decode_machine(field(document, "bottom", path), path + ".bottom")
	f = decode_function(field(document, "f", path), top.input, bottom.input, path + ".f")
	g = decode_function(field(document, "g", path), top.output, bottom.output, path + ".g")
	alpha = decode_function(field(document, "alpha", path), top.states, bottom.states, path + ".alpha")
	with located(path):
		return Cell(top, bottom, f, g, alpha)


def decode_monad(document, path="$", nested=True):
	_check_kind(document, "monad", path, nested)
	machine = decode_machine(field(document, "machine", path), path + ".machine")
	truncated = field(document, "truncated", path, False)
	if not isinstance(truncated, bool):
		raise DocumentException("Expected true or false", path + ".truncated")

	e0 = field(document, "e0", path)
	mu = field(document, "mu", path)
	with located(path):
		return DoubleMonad(machine, e0, mu, truncated)


def decode_matched_pair(document, path="$", nested=True):
	_check_kind(document, "matched-pair", path, nested)
	monoid = decode_monoid(field(document, "monoid", path), path + ".monoid")
	alphabet = decode_finset(field(document, "alphabet", path), path + ".alphabet")
	with located(path):
		return MatchedPair(monoid, alphabet, _table(field(document, "d", path), path + ".d"), _table(field(document, "s", path), path + ".s"))


def decode_element(document, path="$", nested=True):
	"""
	Elements do not know their alphabet; letters are validated once the
	element meets a matched pair
	"""
	if isinstance(document, (list, tuple)) and len(document) == 2:
		document = {"e": document[0], "w": document[1]}

	_check_kind(document, "element", path, nested)
	e = field(document, "e", path)
	if not is_index(e) or e < 0:
		raise DocumentException("Expected a state index", path + ".e")

	return BicrossedElement(int(e), as_word(field(document, "w", path), sys.maxsize, path + ".w"))


def decode_module(document, path="$", nested=True):
	_check_kind(document, "module", path, nested)
	monad = decode_monad(field(document, "monad", path), path + ".monad")
	machine = decode_machine(field(document, "machine", path), path + ".machine")
	with located(path):
		return ModuleStructure(monad, machine, _table(field(document, "xi", path), path + ".xi"))


def decode_representation(document, path="$", nested=True):
	_check_kind(document, "representation", path, nested)
	carrier = decode_finset(field(document, "carrier", path), path + ".carrier")
	with located(path):
		representation = BicrossedRepresentation(carrier, field(document, "alpha", path), field(document, "beta", path))

	output = field(document, "output", path, None)
	output = decode_finset(output, path + ".output") if output is not None else None
	sigma = field(document, "sigma", path, None)
	if sigma is not None:
		if output is None:
			raise DocumentException("An output table needs an output set", path + ".output")

		with located(path + ".sigma"):
			sigma = as_table(sigma, representation.alphabet_size, carrier.size, output.size)

	return RepresentationDocument(representation, output, sigma)


def decode_tight_morphism(document, path="$", nested=True):
	_check_kind(document, "tight-morphism", path, nested)
	source = decode_monad(field(document, "source", path), path + ".source")
	target = decode_monad(field(document, "target", path), path + ".target")
	f = decode_function(field(document, "f", path), source.alphabet, target.alphabet, path + ".f")
	alpha = decode_function(field(document, "alpha", path), source.states, target.states, path + ".alpha")
	return MonadMapDocument(source, target, TightMonadMorphism(f, alpha))


def decode_loose_map(document, path="$", nested=True):
	_check_kind(document, "loose-map", path, nested)
	source = decode_monad(field(document, "source", path), path + ".source")
	target = decode_monad(field(document, "target", path), path + ".target")
	machine = decode_machine(field(document, "machine", path), path + ".machine")
	with located(path):
		loose = LooseMonadMap(machine, _table(field(document, "delta", path), path + ".delta"), _table(field(document, "sigma", path), path + ".sigma"))

	return MonadMapDocument(source, target, loose)


def decode_grid(document, path="$", nested=True):
	_check_kind(document, "grid", path, nested)
	rows = field(document, "cells", path)
	if not isinstance(rows, list) or len(rows) != 2 or any(not isinstance(row, list) or len(row) != 2 for row in rows):
		raise DocumentException("Expected two rows of two cells", path + ".cells")

	return tuple(tuple(decode_cell(cell, "%s.cells[%i][%i]" % (path, row, column)) for column, cell in enumerate(cells))
				 for row, cells in enumerate(rows))


DECODERS = {
	"finset": decode_finset,
	"finfun": decode_finfun,
	"monoid": decode_monoid,
	"action": decode_action,
	"machine": decode_machine,
	"cell": decode_cell,
	"monad": decode_monad,
	"matched-pair": decode_matched_pair,
	"element": decode_element,
	"module": decode_module,
	"representation": decode_representation,
	"tight-morphism": decode_tight_morphism,
	"loose-map": decode_loose_map,
	"grid": decode_grid
}


def decode(document, kinds=None, path="$"):
	"""
	Decode a parsed JSON document

	:param document:  Parsed JSON value
	:param kinds:  Accepted kinds; all kinds if omitted
	:param str path:  Path of the document
	:return:  The object, or a list of objects for a bundle
	"""
	if isinstance(document, list):
		return [decode(item, kinds, "%s[%i]" % (path, index)) for index, item in enumerate(document)]

	if not isinstance(document, dict):
		raise DocumentException("Expected a JSON object with a 'kind' field", path)

	kind = field(document, "kind", path)
	if kind not in DECODERS:
		raise DocumentException("Unknown kind '%s'" % kind, path + ".kind")

	if kinds and kind not in kinds:
		raise DocumentException("Expected a document of kind %s, got '%s'" % (" or ".join("'%s'" % item for item in kinds), kind), path + ".kind")

	return DECODERS[kind](document, path, nested=False)


def load_json(source, stdin=None):
	"""
	Read JSON from a file, or from standard input if `source` is `-`

	:param str source:  File path
	:param stdin:  Stream to use for `-`
	:return:  Parsed JSON value
	"""
	try:
		if source == "-":
			return json.load(stdin if stdin is not None else sys.stdin)

		with open(source, encoding="utf-8") as infile:
			return json.load(infile)
	except json.JSONDecodeError as e:
		raise DocumentException("Malformed JSON at line %i, column %i: %s" % (e.lineno, e.colno, e.msg)) from None
	except OSError as e:
		raise DocumentException("Cannot read %s: %s" % (source, e.strerror)) from None


def parse_document(source, kinds=None, stdin=None):
	"""
	Read and decode a document

	:param str source:  File path, or `-` for standard input
	:param kinds:  Accepted kinds
	:param stdin:  Stream to use for `-`
	:return:  The described object, or a list for a bundle
	"""
	return decode(load_json(source, stdin), kinds)


def _finset_json(carrier):
	return carrier.size if carrier.labels is None else {"size": carrier.size, "labels": list(carrier.labels)}


def _rows(table):
	return [list(row) for row in table]


@singledispatch
def to_document(value):
	"""
	Document describing an object, such that decode gives it back

	:param value:  Workbench object
	:return dict:
	"""
	raise TypeError("No document form for %s" % type(value).__name__)


@to_document.register
def _(value: FinSet):
	return {"kind": "finset", "size": value.size, **({"labels": list(value.labels)} if value.labels is not None else {})}


@to_document.register
def _(value: FinFun):
	return {"kind": "finfun", "dom": _finset_json(value.dom), "cod": _finset_json(value.cod), "table": list(value.table)}


@to_document.register
def _(value: FinMonoid):
	return {"kind": "monoid", "carrier": _finset_json(value.carrier), "unit": value.unit, "mult": _rows(value.mult)}


@to_document.register
def _(value: MonoidAction):
	return {"kind": "action", "monoid": to_document(value.monoid), "set": _finset_json(value.set), "act": _rows(value.act), "side": value.side}


@to_document.register
def _(value: MealyMachine):
	return {"kind": "machine", "input": _finset_json(value.input), "output": _finset_json(value.output),
			"states": _finset_json(value.states), "d": _rows(value.d), "s": _rows(value.s)}


@to_document.register
def _(value: Cell):
	return {"kind": "cell", "top": to_document(value.top), "bottom": to_document(value.bottom),
			"f": list(value.f.table), "g": list(value.g.table), "alpha": list(value.alpha.table)}


@to_document.register
def _(value: DoubleMonad):
	document = {"kind": "monad", "machine": to_document(value.machine), "e0": value.e0, "mu": _rows(value.mu)}
	if value.truncated:
		document["truncated"] = True

	return document


@to_document.register
def _(value: MatchedPair):
	return {"kind": "matched-pair", "monoid": to_document(value.monoid), "alphabet": _finset_json(value.alphabet),
			"d": _rows(value.d), "s": _rows(value.s)}


@to_document.register
def _(value: BicrossedElement):
	return {"kind": "element", "e": value.e, "w": list(value.w)}


@to_document.register
def _(value: ModuleStructure):
	return {"kind": "module", "monad": to_document(value.monad), "machine": to_document(value.machine), "xi": _rows(value.xi)}


@to_document.register
def _(value: BicrossedRepresentation):
	return {"kind": "representation", "carrier": _finset_json(value.carrier), "alpha": _rows(value.alpha), "beta": _rows(value.beta)}


@to_document.register
def _(value: RepresentationDocument):
	document = to_document(value.representation)
	if value.output is not None:
		document["output"] = _finset_json(value.output)
	if value.sigma is not None:
		document["sigma"] = _rows(value.sigma)

	return document


@to_document.register
def _(value: MonadMapDocument):
	document = {"source": to_document(value.source), "target": to_document(value.target)}
	if isinstance(value.map, TightMonadMorphism):
		return {"kind": "tight-morphism", **document, "f": list(value.map.f.table), "alpha": list(value.map.alpha.table)}

	return {"kind": "loose-map", **document, "machine": to_document(value.map.machine),
			"delta": _rows(value.map.delta), "sigma": _rows(value.map.sigma)}


def grid_document(grid):
	return {"kind": "grid", "cells": [[to_document(cell) for cell in row] for row in grid]}


def dump_report(report):
	"""
	Serialise a report

	Key order is insertion order, so reports are byte-for-byte stable for
	fixed inputs.

	:param dict report:
	:return str:
	"""
	return json.dumps(report, indent=config.REPORT_INDENT, ensure_ascii=False)


def to_report(value):
	"""
	Convert a value to plain JSON for a report

	Workbench objects become their documents and verdicts their JSON form;
	named tuples become objects and other containers are converted
	recursively.

	:param value:
	:return:  Value consisting only of dicts, lists, strings, numbers, bools
	and None
	"""
	if to_document.dispatch(type(value)) is not to_document.dispatch(object):
		return to_document(value)
	elif isinstance(value, Verdict):
		return value.to_json()
	elif hasattr(value, "_asdict"):
		return {key: to_report(item) for key, item in value._asdict().items()}
	elif isinstance(value, dict):
		return {str(key): to_report(item) for key, item in value.items()}
	elif isinstance(value, (list, tuple)):
		return [to_report(item) for item in value]
	elif hasattr(value, "item") and not isinstance(value, (str, bytes)):
		# numpy scalars
		return value.item()

	return value
