import io
import json

import numpy as np
import pytest

from hypothesis import given

from common.lib.documents import (DocumentException, MonadMapDocument, RepresentationDocument, decode, dump_report,
								  grid_document, load_json, parse_document, to_document, to_report)
from common.lib.exceptions import InputException
from common.lib.finsets import FinSet, FinFun
from common.lib.mealy import identity_cell
from common.lib.monads import BicrossedRepresentation, LooseMonadMap, TightMonadMorphism, regular_module
from common.lib.monoids import BicrossedElement
from common.lib.verdict import Verdict

from .strategies import grids, machines, valid_cells

ABSORBING = {"kind": "machine", "input": 2, "output": 2, "states": 2, "d": [[0, 1], [0, 1]], "s": [[0, 0], [1, 0]]}


def error_path(document, kinds=None):
	with pytest.raises(InputException) as error:
		decode(document, kinds)

	return error.value.path


class TestErrors:
	def test_table_entry(self):
		assert error_path({**ABSORBING, "d": [[0, 1], [5, 1]]}) == "$.d[1][0]"

	def test_unit(self):
		assert error_path({"kind": "monad", "machine": ABSORBING, "e0": 2, "mu": [[0, 1], [1, 1]]}) == "$.e0"

	def test_nested_table_entry(self):
		machine = {**ABSORBING, "d": [[0, 1], [5, 1]]}
		assert error_path({"kind": "monad", "machine": machine, "e0": 0, "mu": [[0, 1], [1, 1]]}) == "$.machine.d[1][0]"

	def test_nested_constructor_error(self):
		machine = {**ABSORBING, "output": 3}
		assert error_path({"kind": "monad", "machine": machine, "e0": 0, "mu": [[0, 1], [1, 1]]}) == "$.machine.output"

	def test_missing_kind(self):
		assert error_path({"size": 2}) == "$.kind"

	def test_unknown_kind(self):
		assert error_path({"kind": "automaton"}) == "$.kind"

	def test_kind_not_accepted(self):
		assert error_path(ABSORBING, kinds=["monad"]) == "$.kind"

	def test_missing_field(self):
		document = dict(ABSORBING)
		del document["s"]
		assert error_path(document) == "$.s"

	def test_nested_kind_mismatch(self):
		document = {"kind": "monad", "machine": {**ABSORBING, "kind": "cell"}, "e0": 0, "mu": [[0, 1], [1, 1]]}
		assert error_path(document) == "$.machine.kind"

	def test_bad_set_size(self):
		assert error_path({**ABSORBING, "states": -1}) == "$.states"

	def test_bundle_item(self):
		assert error_path([ABSORBING, {**ABSORBING, "s": [[0, 0], [1, 2]]}]) == "$[1].s[1][1]"

	def test_not_an_object(self):
		assert error_path(3) == "$"

	def test_truncated_flag(self):
		document = {"kind": "monad", "machine": ABSORBING, "e0": 0, "mu": [[0, 1], [1, 1]], "truncated": "yes"}
		assert error_path(document) == "$.truncated"

	def test_grid_shape(self):
		assert error_path({"kind": "grid", "cells": [[]]}) == "$.cells"

	def test_sigma_without_output(self):
		document = {"kind": "representation", "carrier": 1, "alpha": [[0]], "beta": [[0]], "sigma": [[0]]}
		assert error_path(document) == "$.output"

	def test_element_state(self):
		assert error_path({"kind": "element", "e": -1, "w": []}) == "$.e"


class TestDecoding:
	def test_machine(self, absorbing_machine):
		assert decode(ABSORBING) == absorbing_machine

	def test_sets_as_documents(self, absorbing_machine):
		assert decode({**ABSORBING, "input": {"kind": "finset", "size": 2}, "states": {"size": 2}}) == absorbing_machine

	def test_labels(self):
		carrier = decode({"kind": "finset", "size": 2, "labels": ["e0", "z"]})
		assert carrier.label(1) == "z"

	def test_monad(self, absorbing_monad):
		assert decode({"kind": "monad", "machine": ABSORBING, "e0": 0, "mu": [[0, 1], [1, 1]]}) == absorbing_monad

	def test_bundle(self, absorbing_machine):
		assert decode([ABSORBING, ABSORBING]) == [absorbing_machine, absorbing_machine]

	def test_element_shorthand(self):
		assert decode({"kind": "element", "e": 1, "w": [0, 1]}) == BicrossedElement(1, (0, 1))

	def test_cell_with_function_documents(self, absorbing_machine):
		identity = {"kind": "finfun", "dom": 2, "cod": 2, "table": [0, 1]}
		document = {"kind": "cell", "top": ABSORBING, "bottom": ABSORBING, "f": identity, "g": [0, 1], "alpha": [0, 1]}
		assert decode(document) == identity_cell(absorbing_machine)


class TestRoundTrips:
	@given(machines())
	def test_machines(self, machine):
		assert decode(to_document(machine)) == machine

	@given(valid_cells())
	def test_cells(self, cell):
		assert decode(json.loads(json.dumps(to_document(cell)))) == cell

	@given(grids())
	def test_grids(self, grid):
		assert decode(grid_document(grid)) == grid

	def test_monad_and_module(self, absorbing_monad):
		module = regular_module(absorbing_monad)
		assert decode(to_document(absorbing_monad)) == absorbing_monad
		assert decode(to_document(module)) == module

	def test_matched_pair(self, absorbing_pair):
		assert decode(to_document(absorbing_pair)) == absorbing_pair

	def test_representation_with_output(self, absorbing_monad):
		representation = BicrossedRepresentation(FinSet(2), absorbing_monad.mu, absorbing_monad.d)
		document = RepresentationDocument(representation, FinSet(2), absorbing_monad.s)
		assert decode(to_document(document)) == document

	def test_monad_maps(self, absorbing_monad, cyclic_monad):
		identity = FinFun.identity(FinSet(2))
		tight = MonadMapDocument(absorbing_monad, absorbing_monad, TightMonadMorphism(identity, identity))
		assert decode(to_document(tight)) == tight

		loose = MonadMapDocument(absorbing_monad, cyclic_monad, LooseMonadMap(absorbing_monad.machine, ((0, 1), (0, 1)), ((0, 1), (1, 1))))
		assert decode(to_document(loose)) == loose

	def test_unsupported_value(self):
		with pytest.raises(TypeError):
			to_document(object())


class TestReading:
	def test_stdin(self, absorbing_machine):
		assert parse_document("-", stdin=io.StringIO(json.dumps(ABSORBING))) == absorbing_machine

	def test_file(self, tmp_path, absorbing_machine):
		path = tmp_path / "machine.json"
		path.write_text(json.dumps(ABSORBING), encoding="utf-8")
		assert parse_document(str(path), kinds=["machine"]) == absorbing_machine

	def test_malformed_json(self):
		with pytest.raises(DocumentException) as error:
			load_json("-", stdin=io.StringIO('{"kind": "machine",'))

		assert error.value.path == "$"
		assert "line 1" in str(error.value)

	def test_missing_file(self, tmp_path):
		with pytest.raises(DocumentException):
			load_json(str(tmp_path / "absent.json"))


class TestReports:
	def test_verdicts(self):
		assert to_report(Verdict.fail("ma_1", triple=(0, 1, 2), lhs=0, rhs=1)) == {
			"pass": False, "witness": {"axiom": "ma_1", "triple": [0, 1, 2], "lhs": 0, "rhs": 1}}

	def test_nested_values(self, absorbing_machine):
		report = to_report({"machine": absorbing_machine, "sizes": (np.int64(2), 3), "element": BicrossedElement(0, (1,))})
		assert report["machine"] == ABSORBING
		assert report["sizes"] == [2, 3]
		assert isinstance(report["sizes"][0], int)
		assert report["element"] == {"kind": "element", "e": 0, "w": [1]}

	def test_key_order_is_stable(self):
		assert dump_report({"pass": True, "detail": {"bound": 4}}) == '{"pass": true, "detail": {"bound": 4}}'
