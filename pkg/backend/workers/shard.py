"""
Evaluate a function over one contiguous shard of a candidate space
"""
from backend.abstract.worker import BasicWorker
from common.lib.exceptions import WorkerInterruptedException


class ShardWorker(BasicWorker):
	"""
	Apply a function to every candidate in a shard, in order

	Results are stored in `results` in candidate order, so that the manager
	can merge shards without regard to which finished first.
	"""
	type = "shard"

	def __init__(self, logger, function, candidates, offset=0, manager=None):
		"""
		:param Logger logger:  Logging interface
		:param callable function:  Function to apply to each candidate
		:param list candidates:  Candidates in this shard
		:param int offset:  Index of the first candidate in the full space
		:param ShardManager manager:  Manager that started this worker
		"""
		super().__init__(logger=logger, manager=manager)
		self.function = function
		self.candidates = candidates
		self.offset = offset
		self.results = []
		self.name = "%s-%i" % (self.type, offset)

	def work(self):
		for candidate in self.candidates:
			if self.interrupted:
				raise WorkerInterruptedException("Interrupted after %i of %i candidates" % (len(self.results), len(self.candidates)))

			self.results.append(self.function(candidate))

		self.log.debug("Worker %s evaluated %i candidates" % (self.name, len(self.results)))
