"""
Double pullbacks of tight cospans
"""
from backend.abstract.command import BasicCommand
from common.lib.documents import to_document
from common.lib.doublecat import double_pullback
from common.lib.exceptions import InputException


class Pullback(BasicCommand):
	"""
	The double pullback of f: A → X ← B: g, and optionally the mediating
	cell for a pair of witness cells
	"""
	type = "pullback"  # subcommand
	category = "Universal constructions"  # category
	title = "Double pullback"  # title displayed in help
	description = "Builds the pullback object with its projection cells; given cells ξ_A: u → i_A and ξ_B: u → i_B, also the mediating cell u → i_P."

	documents = {
		"f": {
			"kinds": ["finfun"],
			"help": "Function A → X"
		},
		"g": {
			"kinds": ["finfun"],
			"help": "Function B → X"
		},
		"witnesses": {
			"kinds": ["cell"],
			"many": True,
			"required": False,
			"help": "Two witness cells, or a bundle of two"
		}
	}

	def process(self):
		witnesses = self.objects["witnesses"]
		if witnesses and len(witnesses) != 2:
			raise InputException("Give exactly two witness cells")

		result = double_pullback(self.objects["f"], self.objects["g"], tuple(witnesses) if witnesses else None)
		report = {
			"pass": True,
			"carrier": result.carrier.size,
			"pairs": [list(pair) for pair in result.pairs],
			"projection_first": to_document(result.projection_first),
			"projection_second": to_document(result.projection_second)
		}
		if result.mediating is not None:
			report["mediating"] = to_document(result.mediating)

		return report
