"""
Check the interchange law
"""
from backend.abstract.command import BasicCommand
from common.lib.doublecat import check_interchange
from common.lib.helpers import get_generator, random_grid
from common.lib.user_input import UserInput
from common.lib.verdict import Verdict


class Interchange(BasicCommand):
	"""
	Check that composing a 2×2 grid row-wise and column-wise agrees
	"""
	type = "interchange"  # subcommand
	category = "Cells"  # category
	title = "Interchange law"  # title displayed in help
	description = "Checks the interchange law on a grid of cells, or on seeded random grids if no grid is given."

	documents = {
		"grid": {
			"kinds": ["grid"],
			"required": False,
			"help": "Grid document"
		}
	}

	options = {
		"samples": {
			"type": UserInput.OPTION_TEXT,
			"coerce_type": int,
			"default": 100,
			"min": 1,
			"help": "Amount of random grids to check if no grid is given"
		},
		"max-size": {
			"type": UserInput.OPTION_TEXT,
			"coerce_type": int,
			"default": 2,
			"min": 1,
			"max": 4,
			"help": "Largest sets in random grids"
		}
	}

	def process(self):
		if self.objects["grid"] is not None:
			return check_interchange(self.objects["grid"])

		rng = get_generator(self.parameters["seed"])
		grids = [random_grid(rng, self.parameters["max-size"]) for _ in range(self.parameters["samples"])]
		witness = self.manager.first_witness(grids, check_interchange)
		if witness is not None:
			index, _, verdict = witness
			return verdict.relabel(verdict.law, sample=index)

		return Verdict.ok(samples=len(grids), seed=self.parameters["seed"])
