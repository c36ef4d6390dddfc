"""
Compose machines or cells
"""
from backend.abstract.command import BasicCommand
from common.lib.documents import to_document
from common.lib.exceptions import InputException
from common.lib.mealy import Cell, MealyMachine, cell_compose, check_cell, loose_compose
from common.lib.user_input import UserInput


class Compose(BasicCommand):
	"""
	Loose composition of machines, or horizontal and vertical composition of
	cells
	"""
	type = "compose"  # subcommand
	category = "Cells"  # category
	title = "Compose"  # title displayed in help
	description = "Composes two machines (first then second) or two cells, horizontally (left then right) or vertically (upper then lower)."

	documents = {
		"first": {
			"kinds": ["machine", "cell"],
			"help": "Machine, or left/upper cell"
		},
		"second": {
			"kinds": ["machine", "cell"],
			"help": "Machine, or right/lower cell"
		}
	}

	options = {
		"direction": {
			"type": UserInput.OPTION_CHOICE,
			"default": "horizontal",
			"options": {"horizontal": "Horizontal", "vertical": "Vertical"},
			"help": "Direction in which cells are composed"
		}
	}

	def process(self):
		first, second = self.objects["first"], self.objects["second"]

		if isinstance(first, MealyMachine) and isinstance(second, MealyMachine):
			return {**to_document(loose_compose(first, second)), "pass": True}

		if not isinstance(first, Cell) or not isinstance(second, Cell):
			raise InputException("Compose two machines or two cells, not one of each")

		composite = cell_compose(self.parameters["direction"], first, second)
		return {**to_document(composite), **check_cell(composite).to_json()}
