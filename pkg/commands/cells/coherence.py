"""
Check coherence of loose composition
"""
from backend.abstract.command import BasicCommand
from common.lib.exceptions import InputException
from common.lib.mealy import check_pentagon, check_triangle
from common.lib.verdict import Verdict


class Coherence(BasicCommand):
	"""
	Check the triangle identity on two composable machines, and the pentagon
	on four
	"""
	type = "coherence"  # subcommand
	category = "Cells"  # category
	title = "Coherence"  # title displayed in help
	description = "Checks the triangle identity of the unitors for two composable machines, plus the pentagon of the associators for four."

	documents = {
		"machines": {
			"kinds": ["machine"],
			"many": True,
			"help": "Two or four composable machines"
		}
	}

	def process(self):
		machines = self.objects["machines"]
		if len(machines) not in (2, 4):
			raise InputException("Give two machines for the triangle, or four for the pentagon and triangle")

		return Verdict.first_failure(
			lambda: check_triangle(machines[0], machines[1]),
			lambda: check_pentagon(*machines) if len(machines) == 4 else Verdict.ok()
		)
