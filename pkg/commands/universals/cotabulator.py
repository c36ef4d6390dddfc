"""
Cotabulators of machines
"""
from backend.abstract.command import BasicCommand
from common.lib.documents import to_document
from common.lib.doublecat import cotabulator


class Cotabulator(BasicCommand):
	"""
	The cotabulator of m: A ⇸ B, and optionally the factorization of a cell
	ξ: m → i_X through it
	"""
	type = "cotabulator"  # subcommand
	category = "Universal constructions"  # category
	title = "Cotabulator"  # title displayed in help
	description = "Builds the universal cell τ: m → i_T with T the quotient of A + B identifying s(a, e) with a, and factors a given cell through it."

	documents = {
		"machine": {
			"kinds": ["machine"],
			"help": "Machine document"
		},
		"xi": {
			"kinds": ["cell"],
			"required": False,
			"help": "Cell from the machine to an identity loose morphism"
		}
	}

	def process(self):
		result = cotabulator(self.objects["machine"], self.objects["xi"])
		report = {"pass": True, "carrier": result.carrier.size, "tau": to_document(result.tau)}
		if result.factorization is not None:
			report["factorization"] = list(result.factorization.table)

		return report
