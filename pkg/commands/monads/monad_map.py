"""
Check maps between monads
"""
from backend.abstract.command import BasicCommand
from common.lib.documents import to_document
from common.lib.exceptions import InputException
from common.lib.monads import (TightMonadMorphism, LooseMonadMap, check_tight_monad_morphism, check_loose_monad_map,
							   induced_bicrossed_hom, lambda_cell)
from common.lib.user_input import UserInput


class CheckMonadMap(BasicCommand):
	"""
	Check a tight morphism of monads, or a loose map of monads
	"""
	type = "monad-map"  # subcommand
	category = "Monads"  # category
	title = "Monad map"  # title displayed in help
	description = "Checks a tight morphism of monads (and tabulates the induced homomorphism of bicrossed products up to --bound), a loose map of monads, or only the fugality of its output table."

	documents = {
		"map": {
			"kinds": ["tight-morphism", "loose-map"],
			"help": "Tight morphism or loose map document, including source and target monads"
		}
	}

	options = {
		"kind": {
			"type": UserInput.OPTION_CHOICE,
			"default": "tight",
			"options": {"tight": "Tight morphism", "loose": "Loose map", "fugality": "Fugality only"},
			"help": "What to check"
		}
	}

	def process(self):
		source, target, morphism = self.objects["map"]
		kind = self.parameters["kind"]

		if kind == "tight":
			if not isinstance(morphism, TightMonadMorphism):
				raise InputException("Checking a tight morphism needs a tight-morphism document", "$.kind")

			verdict = check_tight_monad_morphism(source, target, morphism)
			if not verdict or source.truncated or target.truncated:
				return verdict

			table, hom = induced_bicrossed_hom(source, target, morphism, self.parameters["bound"])
			return {**hom.to_json(), "homomorphism": table}

		if not isinstance(morphism, LooseMonadMap):
			raise InputException("Checking a loose map needs a loose-map document", "$.kind")

		verdict = check_loose_monad_map(source, target, morphism, fugality_only=kind == "fugality")
		if kind == "fugality":
			return verdict

		return {**verdict.to_json(), "lambda": to_document(lambda_cell(source, target, morphism))}
