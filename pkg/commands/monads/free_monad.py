"""
Free monads on endomorphisms
"""
import config

from backend.abstract.command import BasicCommand
from common.lib.documents import to_document
from common.lib.exceptions import InputException
from common.lib.monads import FreeMonadConfig, free_monad, free_monad_law_search, free_monad_extend, check_free_extension_unique
from common.lib.user_input import UserInput


class BuildFreeMonad(BasicCommand):
	"""
	Build the truncated free monad on F: A ⇸ A and check its axioms

	Given a cell γ: F → N and the monad N, the extension γ* is computed and
	checked to be the unique morphism of monads restricting to γ.
	"""
	type = "free-monad"  # subcommand
	category = "Monads"  # category
	title = "Free monad"  # title displayed in help
	description = "Builds the free monad on a machine A ⇸ A with states the words of length up to --length, checks the axioms, and compares with the literal recursions."

	documents = {
		"machine": {
			"kinds": ["machine"],
			"help": "Endomorphism F: A ⇸ A"
		},
		"gamma": {
			"kinds": ["cell"],
			"required": False,
			"help": "Cell F → N to extend"
		},
		"target": {
			"kinds": ["monad"],
			"required": False,
			"help": "Monad N that gamma lands in"
		}
	}

	options = {
		"length": {
			"type": UserInput.OPTION_TEXT,
			"coerce_type": int,
			"default": config.FREE_MONAD_BOUND,
			"min": 1,
			"help": "Longest state word"
		},
		"reverse": {
			"type": UserInput.OPTION_TOGGLE,
			"default": False,
			"help": "Reverse the tail at every step of s⁺"
		},
		"threading": {
			"type": UserInput.OPTION_CHOICE,
			"default": "threaded",
			"options": {"threaded": "The tail sees s(a, e)", "pointwise": "The tail sees a"},
			"help": "How d⁺ passes letters along the word"
		},
		"mu-order": {
			"type": UserInput.OPTION_CHOICE,
			"default": "concat",
			"options": {"concat": "μ(es, es') = es ⌢ es'", "reversed": "μ(es, es') = es' ⌢ es"},
			"help": "Order of the multiplication"
		},
		"law-search": {
			"type": UserInput.OPTION_TOGGLE,
			"default": False,
			"help": "Check the axioms under all eight interpretations instead"
		}
	}

	def process(self):
		machine = self.objects["machine"]

		if self.parameters["law-search"]:
			results = free_monad_law_search(machine, self.parameters["length"])
			return {"pass": True, "interpretations": [{"interpretation": cfg.as_dict(), **verdict.to_json()} for cfg, verdict in results]}

		cfg = FreeMonadConfig(self.parameters["length"], self.parameters["reverse"], self.parameters["threading"], self.parameters["mu-order"])
		free = free_monad(machine, cfg)
		report = {
			**to_document(free.monad),
			**free.verdict.to_json(),
			"words": [list(word) for word in free.words],
			"unit": to_document(free.unit),
			"discrepancy": free.discrepancy
		}

		gamma, target = self.objects["gamma"], self.objects["target"]
		if (gamma is None) != (target is None):
			raise InputException("Extending needs both a cell and its target monad")

		if gamma is not None:
			extension = free_monad_extend(machine, gamma, target, cfg)
			unique = check_free_extension_unique(machine, gamma, target, cfg)
			report["extension"] = {"alpha": list(extension.morphism.alpha.table), "verdict": extension.verdict.to_json(), "unique": unique.to_json()}
			report["pass"] = free.verdict.passed and extension.verdict.passed and unique.passed

		return report
