"""
Check the matching relation of a representation
"""
from backend.abstract.command import BasicCommand
from common.lib.monads import check_matching_relation


class CheckMatching(BasicCommand):
	"""
	Check that a pair of actions is a representation of E⋈A*
	"""
	type = "check-matching"  # subcommand
	category = "Modules"  # category
	title = "Check matching relation"  # title displayed in help
	description = "Checks that alpha is an action of E and that β⁺(w, α(h, x)) = α(w ⊗⁺ h, β⁺(w ⊙⁺ h, x)) for words up to --bound letters."

	documents = {
		"monad": {
			"kinds": ["monad"],
			"help": "Monad document"
		},
		"representation": {
			"kinds": ["representation"],
			"help": "Representation document"
		}
	}

	def process(self):
		return check_matching_relation(self.objects["monad"], self.objects["representation"].representation, self.parameters["bound"])
