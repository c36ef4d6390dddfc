"""
Enumerate all monads of a given size
"""
from backend.abstract.command import BasicCommand
from common.lib.documents import to_document
from common.lib.monads import enumerate_monads
from common.lib.user_input import UserInput


class EnumerateMonads(BasicCommand):
	"""
	List every monad with |A| letters and |E| states
	"""
	type = "enumerate-monads"  # subcommand
	category = "Monads"  # category
	title = "Enumerate monads"  # title displayed in help
	description = "Enumerates all monads on an alphabet of the given size with the given amount of states, ordered by (d, s, e0, μ)."

	options = {
		"alphabet": {
			"type": UserInput.OPTION_TEXT,
			"coerce_type": int,
			"default": 2,
			"min": 1,
			"help": "Size of the alphabet A"
		},
		"states": {
			"type": UserInput.OPTION_TEXT,
			"coerce_type": int,
			"default": 2,
			"min": 1,
			"help": "Amount of states |E|"
		},
		"count-only": {
			"type": UserInput.OPTION_TOGGLE,
			"default": False,
			"help": "Only report the amount of monads"
		}
	}

	def process(self):
		monads = enumerate_monads(self.parameters["alphabet"], self.parameters["states"], mapper=self.manager)
		self.log.info("Found %i monads with |A| = %i, |E| = %i" % (len(monads), self.parameters["alphabet"], self.parameters["states"]))

		report = {"pass": True, "count": len(monads)}
		if not self.parameters["count-only"]:
			report["monads"] = [to_document(monad) for monad in monads]

		return report
