"""
Check the cell condition
"""
from backend.abstract.command import BasicCommand
from common.lib.mealy import check_cell


class CheckCell(BasicCommand):
	"""
	Check that a square of machines and functions is a cell
	"""
	type = "check-cell"  # subcommand
	category = "Cells"  # category
	title = "Check cell"  # title displayed in help
	description = "Checks d_bottom(f a, α e) = α(d_top(a, e)) and s_bottom(f a, α e) = g(s_top(a, e)) for all letters and states."

	documents = {
		"cell": {
			"kinds": ["cell"],
			"help": "Cell document"
		}
	}

	def process(self):
		return check_cell(self.objects["cell"])
