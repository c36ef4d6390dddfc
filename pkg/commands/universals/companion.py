"""
Companions of tight functions
"""
from backend.abstract.command import BasicCommand
from common.lib.documents import to_document
from common.lib.doublecat import companion, check_companion_identities


class Companion(BasicCommand):
	"""
	The companion f_* of a function f: A → B, with its unit and counit
	"""
	type = "companion"  # subcommand
	category = "Universal constructions"  # category
	title = "Companion"  # title displayed in help
	description = "Builds the single-state machine f_*: A ⇸ B with output f and its cells η, ε, and checks the companion identities."

	documents = {
		"function": {
			"kinds": ["finfun"],
			"help": "Function document"
		}
	}

	def process(self):
		function = self.objects["function"]
		result = companion(function)

		return {
			**to_document(result.machine),
			**check_companion_identities(function, *result).to_json(),
			"epsilon": to_document(result.epsilon),
			"eta": to_document(result.eta)
		}
