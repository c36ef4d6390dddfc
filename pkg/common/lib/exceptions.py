class WorkbenchException(Exception):
	pass


class InputException(WorkbenchException):
	"""
	Raise if input is malformed

	The `path` names the offending field of the input document, e.g.
	`$.machine.d[1][0]`, or is `$` if the input as a whole is at fault.
	"""
	def __init__(self, message, path="$"):
		super().__init__(message)
		self.path = path


class CommandParametersException(InputException):
	"""
	Raise if a command is given invalid options
	"""
	pass


class BudgetExceededException(InputException):
	"""
	Raise if an enumeration would exceed the configured candidate budget
	"""
	def __init__(self, message, estimate, path="$"):
		super().__init__(message, path)
		self.estimate = estimate


class ConstructionException(WorkbenchException):
	"""
	Raise if a construction fails its own identities

	This always signals a bug in the construction, not in its input.
	"""
	pass


class ViolationException(WorkbenchException):
	"""
	Raise if an operation that should produce an object finds a law violation
	instead; the violation is available as `verdict`
	"""
	def __init__(self, message, verdict):
		super().__init__(message)
		self.verdict = verdict


class WorkerInterruptedException(WorkbenchException):
	"""
	Raise when killing a worker before it's done with its shard
	"""
	pass
