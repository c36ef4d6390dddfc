"""
Derive the matched pair of a monad
"""
from backend.abstract.command import BasicCommand
from common.lib.documents import to_document
from common.lib.monads import derive_matched_pair
from common.lib.monoids import check_bicrossed_equations


class MatchedPairOfMonad(BasicCommand):
	"""
	The matched pair (E, A, d, s) underlying a monad, checked against the
	bicrossed equations
	"""
	type = "matched-pair"  # subcommand
	category = "Monads"  # category
	title = "Matched pair"  # title displayed in help
	description = "Derives the matched pair underlying a monad and checks the bicrossed equations for words up to --bound letters."

	documents = {
		"monad": {
			"kinds": ["monad"],
			"help": "Monad document"
		}
	}

	def process(self):
		pair = derive_matched_pair(self.objects["monad"])
		return {**to_document(pair), **check_bicrossed_equations(pair, self.parameters["bound"]).to_json()}
