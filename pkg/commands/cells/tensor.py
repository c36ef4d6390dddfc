"""
Parallel product of machines
"""
from backend.abstract.command import BasicCommand
from common.lib.documents import to_document
from common.lib.mealy import tensor_machines, symmetry_cell, check_cell


class Tensor(BasicCommand):
	"""
	Parallel product of two machines, with the symmetry cell between the two
	orders
	"""
	type = "tensor"  # subcommand
	category = "Cells"  # category
	title = "Parallel product"  # title displayed in help
	description = "Runs two machines side by side on pairs of letters; reports the product and checks its symmetry cell."

	documents = {
		"first": {
			"kinds": ["machine"],
			"help": "First machine"
		},
		"second": {
			"kinds": ["machine"],
			"help": "Second machine"
		}
	}

	def process(self):
		first, second = self.objects["first"], self.objects["second"]
		symmetry = symmetry_cell(first, second)

		return {
			**to_document(tensor_machines(first, second)),
			**check_cell(symmetry).to_json(),
			"symmetry": to_document(symmetry)
		}
