"""
Outcome of a law check
"""
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Verdict:
	"""
	Outcome of a law check

	A failing verdict names the law that failed and carries the first witness
	found, in the canonical enumeration order of the check that produced it.
	Verdicts are truthy if and only if the check passed.
	"""
	passed: bool
	law: str = None
	witness: dict = field(default_factory=dict)
	detail: dict = field(default_factory=dict)

	def __bool__(self):
		return self.passed

	@classmethod
	def ok(cls, **detail):
		"""
		Passing verdict

		:param detail:  Additional information to include in the report, e.g.
		the bound that was checked
		:return Verdict:
		"""
		return cls(True, detail=detail)

	@classmethod
	def fail(cls, law, **witness):
		"""
		Failing verdict

		:param str law:  Label of the violated law
		:param witness:  Arguments at which the law fails, and the evaluated
		sides of the equation as `lhs` and `rhs`
		:return Verdict:
		"""
		return cls(False, law=law, witness=witness)

	@classmethod
	def first_failure(cls, *verdicts):
		"""
		Combine verdicts

		Checks are evaluated lazily if callables are passed instead of
		verdicts, so later checks are skipped once one has failed.

		:return Verdict:  The first failing verdict, or a passing one
		"""
		for verdict in verdicts:
			if callable(verdict):
				verdict = verdict()
			if not verdict:
				return verdict

		return cls.ok()

	def relabel(self, law, **detail):
		"""
		Copy of this verdict with another law label

		Used where one check is phrased in terms of another, e.g. the unit
		and multiplication laws of a monad in terms of monoid laws.

		:param str law:  New label
		:return Verdict:
		"""
		if self.passed:
			return self

		return Verdict(False, law=law, witness={**self.witness, **detail}, detail=self.detail)

	def with_detail(self, **detail):
		"""
		Copy of this verdict with extra report detail

		:return Verdict:
		"""
		return Verdict(self.passed, law=self.law, witness=self.witness, detail={**self.detail, **detail})

	def to_json(self):
		"""
		Serialisable form

		:return dict:  `{"pass": bool}`, with the witness (including the law
		label as `axiom`) when failing and any detail that was recorded
		"""
		report = {"pass": self.passed}
		if not self.passed:
			report["witness"] = {"axiom": self.law, **_jsonable(self.witness)}

		if self.detail:
			report["detail"] = _jsonable(self.detail)

		return report


def _jsonable(value):
	"""
	Convert tuples and nested containers to plain JSON values

	:param value:  Value to convert
	:return:  Value consisting only of dicts, lists, strings, numbers, bools
	and None
	"""
	if isinstance(value, Verdict):
		return value.to_json()
	elif isinstance(value, dict):
		return {str(key): _jsonable(item) for key, item in value.items()}
	elif isinstance(value, (list, tuple)):
		return [_jsonable(item) for item in value]
	elif hasattr(value, "item") and not isinstance(value, (str, bytes)):
		# numpy scalars
		return value.item()

	return value
