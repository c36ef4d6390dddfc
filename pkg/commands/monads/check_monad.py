"""
Check the monad axioms
"""
from backend.abstract.command import BasicCommand
from common.lib.monads import check_monad


class CheckMonad(BasicCommand):
	"""
	Check a candidate monad against all six axioms
	"""
	type = "check-monad"  # subcommand
	category = "Monads"  # category
	title = "Check monad"  # title displayed in help
	description = "Checks ma_1, ma_2, ac_1, ac_2, mc_1 and mc_2, in that order, and reports the first failure."

	documents = {
		"monad": {
			"kinds": ["monad"],
			"help": "Monad document"
		}
	}

	def process(self):
		return check_monad(self.objects["monad"])
