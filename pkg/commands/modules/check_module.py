"""
Check the module axioms
"""
import config

from backend.abstract.command import BasicCommand
from common.lib.monads import check_module
from common.lib.user_input import UserInput


class CheckModule(BasicCommand):
	"""
	Check that ξ: E × P → P makes a machine P: A ⇸ X a module over a monad
	"""
	type = "check-module"  # subcommand
	category = "Modules"  # category
	title = "Check module"  # title displayed in help
	description = "Checks ax_3, ax_4, ax_1 and ax_2 letterwise, then spot-checks ax_1 and ax_2 on words."

	documents = {
		"module": {
			"kinds": ["module"],
			"help": "Module document"
		}
	}

	options = {
		"word-bound": {
			"type": UserInput.OPTION_TEXT,
			"coerce_type": int,
			"default": config.MODULE_WORD_BOUND,
			"min": 1,
			"help": "Longest word of the spot-check"
		}
	}

	def process(self):
		return check_module(self.objects["module"], self.parameters["word-bound"])
