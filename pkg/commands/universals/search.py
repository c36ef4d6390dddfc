"""
Bounded searches for universal objects that do not exist
"""
import config

from backend.abstract.command import BasicCommand
from common.lib.documents import to_report
from common.lib.doublecat import (companion, search_companions, search_initial_object, search_loose_adjunctions,
								  search_tabulator)
from common.lib.exceptions import InputException
from common.lib.finsets import FinFun, FinSet
from common.lib.mealy import MealyMachine
from common.lib.user_input import UserInput


class Search(BasicCommand):
	"""
	Search for initial objects, tabulators, loose adjunctions or companions
	within bounds, and report what rules the candidates out
	"""
	type = "search"  # subcommand
	category = "Universal constructions"  # category
	title = "Bounded search"  # title displayed in help
	description = "Runs a bounded search and reports the bound, the refuted candidates with their witnesses, and any survivors."

	documents = {
		"subject": {
			"kinds": ["machine", "finfun"],
			"required": False,
			"help": "Machine for --target tabulator, function for --target companions"
		}
	}

	options = {
		"target": {
			"type": UserInput.OPTION_CHOICE,
			"default": "initial",
			"options": {"initial": "Initial object", "tabulator": "Tabulator of a machine",
						"adjunctions": "Loose adjunctions", "companions": "Companions of a function"},
			"help": "What to search for"
		},
		"max-size": {
			"type": UserInput.OPTION_TEXT,
			"coerce_type": int,
			"default": None,
			"min": 0,
			"help": "Largest candidate object (3 if not given) or tabulator carrier (|A|·|B| if not given)"
		},
		"max-states": {
			"type": UserInput.OPTION_TEXT,
			"coerce_type": int,
			"default": config.SEARCH_MAX_STATES,
			"min": 1,
			"help": "State bound of enumerated machines"
		},
		"max-alphabet": {
			"type": UserInput.OPTION_TEXT,
			"coerce_type": int,
			"default": 1,
			"min": 0,
			"help": "Largest alphabet of test machines"
		},
		"input": {
			"type": UserInput.OPTION_TEXT,
			"coerce_type": int,
			"default": 1,
			"min": 0,
			"help": "Size of A for loose adjunctions A ⇸ B"
		},
		"output": {
			"type": UserInput.OPTION_TEXT,
			"coerce_type": int,
			"default": 1,
			"min": 0,
			"help": "Size of B for loose adjunctions A ⇸ B"
		}
	}

	def process(self):
		target = self.parameters["target"]
		subject = self.objects["subject"]

		if target == "initial":
			size = {} if self.parameters["max-size"] is None else {"max_size": self.parameters["max-size"]}
			report = search_initial_object(max_alphabet=self.parameters["max-alphabet"], max_states=self.parameters["max-states"],
										   mapper=self.manager, **size)
			return {"pass": not report.survivors, **to_report(report)}

		elif target == "tabulator":
			if not isinstance(subject, MealyMachine):
				raise InputException("A tabulator search needs a machine document")

			report = search_tabulator(subject, self.parameters["max-size"])
			return {"pass": not report.survivors, **to_report(report)}

		elif target == "companions":
			if not isinstance(subject, FinFun):
				raise InputException("A companion search needs a function document")

			found = search_companions(subject, self.parameters["max-states"])
			unique = len(found) == 1 and found[0].machine == companion(subject).machine
			return {"pass": unique, "bound": {"max_states": self.parameters["max-states"]}, "found": len(found),
					"companions": to_report([result.machine for result in found])}

		adjunctions = search_loose_adjunctions(FinSet(self.parameters["input"]), FinSet(self.parameters["output"]),
											   self.parameters["max-states"], mapper=self.manager)
		singletons = all(result.left.states.size == 1 and result.right.states.size == 1 for result in adjunctions)
		return {
			"pass": singletons,
			"bound": {"input": self.parameters["input"], "output": self.parameters["output"], "max_states": self.parameters["max-states"]},
			"found": len(adjunctions),
			"singletons": singletons,
			"adjunctions": [{"left": to_report(result.left), "right": to_report(result.right)} for result in adjunctions]
		}
