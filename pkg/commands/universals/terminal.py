"""
Cells into the terminal object
"""
from backend.abstract.command import BasicCommand
from common.lib.documents import to_document
from common.lib.doublecat import terminal_cell
from common.lib.mealy import check_cell


class Terminal(BasicCommand):
	"""
	The unique cell from a machine to the identity loose morphism on 1
	"""
	type = "terminal"  # subcommand
	category = "Universal constructions"  # category
	title = "Terminal cell"  # title displayed in help
	description = "Builds the cell m → i_1 whose tights and state map are all constant."

	documents = {
		"machine": {
			"kinds": ["machine"],
			"help": "Machine document"
		}
	}

	def process(self):
		cell = terminal_cell(self.objects["machine"])
		return {**to_document(cell), **check_cell(cell).to_json()}
