"""
Conjoints of tight functions
"""
from backend.abstract.command import BasicCommand
from common.lib.documents import to_document
from common.lib.doublecat import conjoint_search


class Conjoint(BasicCommand):
	"""
	Look for a conjoint f^*: B ⇸ A of a function f: A → B

	A conjoint exists exactly when f is a bijection.
	"""
	type = "conjoint"  # subcommand
	category = "Universal constructions"  # category
	title = "Conjoint"  # title displayed in help
	description = "Searches the single-state machines B ⇸ A for a conjoint of f, and reports it with its cells if there is one."

	documents = {
		"function": {
			"kinds": ["finfun"],
			"help": "Function document"
		}
	}

	def process(self):
		function = self.objects["function"]
		found = conjoint_search(function)
		if found is None:
			return {"pass": True, "exists": False, "bijective": function.is_bijective()}

		return {
			**to_document(found.machine),
			"pass": True,
			"exists": True,
			"bijective": function.is_bijective(),
			"epsilon": to_document(found.epsilon),
			"eta": to_document(found.eta)
		}
