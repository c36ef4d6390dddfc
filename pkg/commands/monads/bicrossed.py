"""
Work with the bicrossed product E⋈A*
"""
import json

from backend.abstract.command import BasicCommand
from common.lib.documents import decode_element, to_document
from common.lib.exceptions import CommandParametersException, InputException
from common.lib.monads import DoubleMonad, derive_matched_pair
from common.lib.monoids import (bicrossed_multiply, bicrossed_cayley, check_bicrossed_equations, check_bicrossed_product,
								bicrossed_cospan_relations)
from common.lib.user_input import UserInput
from common.lib.verdict import Verdict


class Bicrossed(BasicCommand):
	"""
	Multiply elements of E⋈A*, check its laws, or tabulate its bounded
	fragment
	"""
	type = "bicrossed"  # subcommand
	category = "Monads"  # category
	title = "Bicrossed product"  # title displayed in help
	description = "Multiplies two elements (e, w), checks the bicrossed equations, unit, associativity and cospan relations, or lists the partial Cayley table up to --bound letters."

	documents = {
		"pair": {
			"kinds": ["matched-pair", "monad"],
			"help": "Matched pair, or a monad to derive it from"
		}
	}

	options = {
		"action": {
			"type": UserInput.OPTION_CHOICE,
			"default": "check",
			"options": {"multiply": "Multiply --left and --right", "check": "Check all laws", "cayley": "Partial Cayley table"},
			"help": "What to do"
		},
		"left": {
			"type": UserInput.OPTION_TEXT,
			"default": "",
			"help": "Left element as JSON, e.g. '[0, [1, 0]]'"
		},
		"right": {
			"type": UserInput.OPTION_TEXT,
			"default": "",
			"help": "Right element as JSON"
		}
	}

	def process(self):
		pair = self.objects["pair"]
		if isinstance(pair, DoubleMonad):
			pair = derive_matched_pair(pair)

		bound = self.parameters["bound"]
		action = self.parameters["action"]

		if action == "multiply":
			left, right = self.element("left"), self.element("right")
			return {**to_document(bicrossed_multiply(left, right, pair)), "pass": True}

		elif action == "cayley":
			elements, table = bicrossed_cayley(pair, bound)
			return {"pass": True, "bound": bound, "elements": [[element.e, list(element.w)] for element in elements], "table": table.tolist()}

		return Verdict.first_failure(
			lambda: check_bicrossed_equations(pair, bound),
			lambda: check_bicrossed_product(pair, bound),
			lambda: bicrossed_cospan_relations(pair, bound)
		).with_detail(bound=bound)

	def element(self, option):
		"""
		Parse an element given as an option

		:param str option:  `left` or `right`
		:return BicrossedElement:
		"""
		if not self.parameters[option]:
			raise CommandParametersException("--%s is required to multiply" % option, "--" + option)

		try:
			value = json.loads(self.parameters[option])
		except json.JSONDecodeError:
			raise CommandParametersException("--%s is not valid JSON" % option, "--" + option) from None

		try:
			return decode_element(value)
		except InputException as e:
			raise CommandParametersException(str(e), "--%s%s" % (option, e.path[1:])) from None
