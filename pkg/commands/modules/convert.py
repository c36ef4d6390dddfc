"""
Convert between modules and representations of E⋈A*
"""
from backend.abstract.command import BasicCommand
from common.lib.documents import RepresentationDocument, to_document
from common.lib.exceptions import InputException
from common.lib.monads import ModuleStructure, module_action_convert


class Convert(BasicCommand):
	"""
	Turn a module into a representation of E⋈A*, or a representation with an
	output table into a module

	The direction follows from the kind of the source document.
	"""
	type = "convert"  # subcommand
	category = "Modules"  # category
	title = "Module ↔ representation"  # title displayed in help
	description = "Converts a module into a representation (α := ξ, β := δ), or a representation with output set and balanced σ into a module over the given monad."

	documents = {
		"source": {
			"kinds": ["module", "representation"],
			"help": "Module, or representation with output and sigma"
		},
		"monad": {
			"kinds": ["monad"],
			"required": False,
			"help": "Monad for the representation"
		}
	}

	def process(self):
		source = self.objects["source"]

		if isinstance(source, ModuleStructure):
			representation = module_action_convert("to-action", source)
			return {**to_document(RepresentationDocument(representation, source.machine.output, source.machine.s)), "pass": True}

		if self.objects["monad"] is None:
			raise InputException("Converting a representation needs the monad it represents")

		if source.output is None or source.sigma is None:
			raise InputException("Converting a representation needs its output set and output table", "$.sigma")

		module = module_action_convert("to-module", (self.objects["monad"], source.representation, source.output, source.sigma))
		return {**to_document(module), "pass": True}
