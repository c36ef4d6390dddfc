"""
Check loose adjunctions
"""
from backend.abstract.command import BasicCommand
from common.lib.doublecat import check_loose_adjunction


class Adjunction(BasicCommand):
	"""
	Check a loose adjunction l ⊣ r with unit η and counit ε
	"""
	type = "adjunction"  # subcommand
	category = "Universal constructions"  # category
	title = "Loose adjunction"  # title displayed in help
	description = "Checks that both machines have a single state and that η: i_A → l;r and ε: r;l → i_B satisfy the zig-zag identities."

	documents = {
		"left": {
			"kinds": ["machine"],
			"help": "Left adjoint l: A ⇸ B"
		},
		"right": {
			"kinds": ["machine"],
			"help": "Right adjoint r: B ⇸ A"
		},
		"eta": {
			"kinds": ["cell"],
			"help": "Unit cell"
		},
		"epsilon": {
			"kinds": ["cell"],
			"help": "Counit cell"
		}
	}

	def process(self):
		return check_loose_adjunction(self.objects["left"], self.objects["right"], self.objects["eta"], self.objects["epsilon"])
