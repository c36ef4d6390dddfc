"""
Basic command - should be inherited by all command line subcommands
"""
import abc

import config

from backend.lib.manager import ShardManager
from common.lib.documents import decode, load_json
from common.lib.exceptions import (InputException, ViolationException, ConstructionException, BudgetExceededException)
from common.lib.user_input import UserInput
from common.lib.verdict import Verdict


class BasicCommand(metaclass=abc.ABCMeta):
	"""
	Abstract command class

	A command reads one or more JSON documents, checks or constructs
	something, and produces a JSON report. Commands declare the documents
	they read in `documents` (name -> settings) and their options in
	`options`, in the `UserInput` vocabulary; the front end turns both into
	command line arguments.

	The report of a check is its verdict; a construction reports the
	constructed object. A report with `"pass": false` means a violation was
	found. Exceptions are mapped to exit statuses by `run()`:

	- ViolationException: 1, with the violation as witness
	- InputException: 2, with the path of the offending field
	- ConstructionException: 3, logged as critical
	"""
	EXIT_PASS = 0
	EXIT_VIOLATION = 1
	EXIT_INPUT = 2
	EXIT_CONSTRUCTION = 3

	#: Subcommand name
	type = "misc"

	#: Category identifier, used to group commands in the help output
	category = "Other"

	#: Title displayed in the help output
	title = "Command"

	#: Command description
	description = "No description available"

	#: Documents read by this command, as name -> settings, where settings
	#: has `kinds` (accepted document kinds), and optionally `many` (any
	#: amount of documents), `required` and `help`
	documents = {}

	#: Configurable options for this command
	options = {}

	#: Options every command accepts
	common_options = {
		"bound": {
			"type": UserInput.OPTION_TEXT,
			"coerce_type": int,
			"default": config.WORD_BOUND,
			"min": 0,
			"help": "Longest word considered for claims about A*"
		},
		"seed": {
			"type": UserInput.OPTION_TEXT,
			"coerce_type": int,
			"default": config.DEFAULT_SEED,
			"min": 0,
			"help": "Seed for randomised suites"
		}
	}

	#: This will be defined automatically upon loading the command
	filepath = None

	def __init__(self, logger, parameters=None, sources=None, manager=None, stdin=None):
		"""
		:param Logger logger:  Logging interface
		:param dict parameters:  Parsed option values
		:param dict sources:  Document name -> path, or list of paths for
		documents that take many
		:param ShardManager manager:  Manager to spread candidate spaces over
		:param stdin:  Stream to read `-` documents from
		"""
		self.log = logger
		self.parameters = parameters if parameters is not None else UserInput.parse_all(self.get_options(), {})
		self.sources = sources or {}
		self.manager = manager if manager is not None else ShardManager(logger)
		self.stdin = stdin
		self.objects = {}

	@classmethod
	def get_options(cls):
		"""
		All options of this command, common ones first

		:return dict:
		"""
		return {**cls.common_options, **cls.options}

	@classmethod
	def from_arguments(cls, logger, arguments, manager=None, stdin=None):
		"""
		Set up a command from raw argument values

		:param Logger logger:  Logging interface
		:param dict arguments:  Raw values as collected by the front end
		:return BasicCommand:
		"""
		parameters = UserInput.parse_all(cls.get_options(), {key: value for key, value in arguments.items() if key.replace("_", "-") not in cls.documents}, silently_correct=False)
		sources = {name: arguments.get(name.replace("-", "_")) for name in cls.documents}
		return cls(logger, parameters=parameters, sources=sources, manager=manager, stdin=stdin)

	def load_documents(self):
		"""
		Read and decode all declared documents

		Input errors are tagged with the name of the document they occur in.
		"""
		for name, settings in self.documents.items():
			source = self.sources.get(name)
			if source is None or source == []:
				if settings.get("required", True):
					raise InputException("Document '%s' is required" % name)

				self.objects[name] = [] if settings.get("many") else None
				continue

			paths = source if isinstance(source, (list, tuple)) else [source]
			decoded = []
			for path in paths:
				try:
					document = decode(load_json(path, self.stdin), settings["kinds"])
				except InputException as e:
					e.document = name
					raise

				decoded.extend(document if isinstance(document, list) else [document])

			if settings.get("many"):
				self.objects[name] = decoded
			elif len(decoded) != 1:
				raise InputException("Expected a single document for '%s', got %i" % (name, len(decoded)))
			else:
				self.objects[name] = decoded[0]

	def run(self):
		"""
		Run the command

		This calls `process()` and turns its result, or the exception it
		raised, into a report and an exit status.

		:return tuple:  (exit status, report)
		"""
		self.log.debug("Running command %s with parameters %s" % (self.type, repr(self.parameters)))
		try:
			self.load_documents()
			report = self.process()
		except ViolationException as e:
			self.log.info("Command %s found a violation: %s" % (self.type, str(e)))
			return self.EXIT_VIOLATION, {**e.verdict.to_json(), "message": str(e)}
		except BudgetExceededException as e:
			self.log.warning("Command %s refused: %s" % (self.type, str(e)))
			return self.EXIT_INPUT, {"error": "input", "message": str(e), "path": e.path, "estimate": e.estimate}
		except InputException as e:
			self.log.warning("Command %s received invalid input: %s at %s" % (self.type, str(e), e.path))
			report = {"error": "input", "message": str(e), "path": e.path}
			if getattr(e, "document", None):
				report["document"] = e.document
			return self.EXIT_INPUT, report
		except ConstructionException as e:
			self.log.critical("Construction failed its own identities in command %s: %s" % (self.type, str(e)))
			return self.EXIT_CONSTRUCTION, {"error": "construction", "message": str(e)}

		if isinstance(report, Verdict):
			report = report.to_json()

		status = self.EXIT_VIOLATION if report.get("pass") is False else self.EXIT_PASS
		self.log.info("Command %s finished with status %i" % (self.type, status))
		return status, report

	@abc.abstractmethod
	def process(self):
		"""
		Do the actual work

		Documents are available in `self.objects` and options in
		`self.parameters`.

		:return:  A Verdict, or a report dictionary
		"""
		pass
