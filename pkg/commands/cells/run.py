"""
Run a machine over a word
"""
from backend.abstract.command import BasicCommand
from common.lib.exceptions import CommandParametersException
from common.lib.helpers import convert_to_int
from common.lib.mealy import run_machine, extend_words
from common.lib.user_input import UserInput


class Run(BasicCommand):
	"""
	Run a machine, or compute the canonical extensions of its tables
	"""
	type = "run"  # subcommand
	category = "Cells"  # category
	title = "Run machine"  # title displayed in help
	description = "Runs a machine over a word from a state, or computes (w ⊗⁺ e, w ⊙⁺ e)."

	documents = {
		"machine": {
			"kinds": ["machine"],
			"help": "Machine document"
		}
	}

	options = {
		"state": {
			"type": UserInput.OPTION_TEXT,
			"coerce_type": int,
			"default": 0,
			"min": 0,
			"help": "Starting state"
		},
		"word": {
			"type": UserInput.OPTION_TEXT,
			"default": "",
			"help": "Comma-separated input letters, e.g. 0,1,1"
		},
		"mode": {
			"type": UserInput.OPTION_CHOICE,
			"default": "run",
			"options": {"run": "Run left to right", "extend": "Canonical extensions"},
			"help": "What to compute"
		}
	}

	def process(self):
		word = self.parse_word(self.parameters["word"])
		machine, state = self.objects["machine"], self.parameters["state"]

		if self.parameters["mode"] == "extend":
			acted, translated = extend_words(machine, word, state)
			return {"pass": True, "state": acted, "word": list(translated)}

		output, final = run_machine(machine, state, word)
		return {"pass": True, "output": list(output), "state": final}

	@staticmethod
	def parse_word(text):
		"""
		Parse a comma-separated word

		:param str text:
		:return list:
		"""
		letters = [letter.strip() for letter in str(text).split(",") if letter.strip()]
		word = [convert_to_int(letter, default=None) for letter in letters]
		if None in word:
			raise CommandParametersException("Letters must be integers", "--word")

		return word
