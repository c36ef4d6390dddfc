"""
Spreads candidate spaces over worker threads
"""
import config

from backend.workers.shard import ShardWorker


class ShardManager:
	"""
	Manages a pool of shard workers

	A candidate space is cut into contiguous shards, one per worker. Results
	are merged in shard order, so the outcome does not depend on which worker
	finishes first. Instances can be passed wherever a `mapper` is expected,
	as they are callable like `map`.
	"""
	log = None
	max_workers = 1
	pool = []

	def __init__(self, logger, max_workers=None):
		"""
		Initialize manager

		:param logger:  Logger object
		:param int max_workers:  Maximum amount of threads; defaults to
		`config.MAX_WORKERS`
		"""
		self.log = logger
		self.max_workers = max(1, config.MAX_WORKERS if max_workers is None else max_workers)
		self.pool = []

	def __call__(self, function, candidates):
		return self.map(function, candidates)

	def shards(self, candidates):
		"""
		Cut candidates into contiguous shards

		:param list candidates:
		:return list:  (offset, shard) tuples
		"""
		amount = min(self.max_workers, len(candidates))
		if not amount:
			return []

		size, remainder = divmod(len(candidates), amount)
		shards, offset = [], 0
		for index in range(amount):
			length = size + (1 if index < remainder else 0)
			shards.append((offset, candidates[offset:offset + length]))
			offset += length

		return shards

	def map(self, function, candidates):
		"""
		Apply a function to all candidates

		:param callable function:
		:param candidates:  Iterable of candidates
		:return list:  Results, in candidate order
		"""
		candidates = list(candidates)
		self.pool = [ShardWorker(self.log, function, shard, offset, manager=self) for offset, shard in self.shards(candidates)]
		self.log.debug("Spreading %i candidates over %i workers" % (len(candidates), len(self.pool)))

		for worker in self.pool:
			worker.start()

		try:
			for worker in self.pool:
				worker.join()
		except KeyboardInterrupt:
			self.log.info("Telling all workers to stop doing whatever they're doing...")
			self.request_interrupt()
			for worker in self.pool:
				worker.join()
			raise

		for worker in self.pool:
			if worker.error is not None:
				raise worker.error

		return [result for worker in self.pool for result in worker.results]

	def collect(self, candidates, predicate):
		"""
		All candidates for which a predicate holds

		:param candidates:
		:param callable predicate:
		:return list:  Accepted candidates, in candidate order
		"""
		candidates = list(candidates)
		return [candidate for candidate, accepted in zip(candidates, self.map(predicate, candidates)) if accepted]

	def first_witness(self, candidates, check):
		"""
		Lowest-index candidate that fails a check

		:param candidates:
		:param callable check:  Returns a Verdict
		:return tuple:  (index, candidate, verdict), or None if all pass
		"""
		candidates = list(candidates)
		for index, verdict in enumerate(self.map(check, candidates)):
			if not verdict:
				return index, candidates[index], verdict

		return None

	def request_interrupt(self):
		"""
		Ask all running workers to stop
		"""
		for worker in self.pool:
			if worker.is_alive():
				worker.request_interrupt()

		if any(worker.is_alive() for worker in self.pool):
			self.log.debug("Waiting for %i workers to stop" % sum(worker.is_alive() for worker in self.pool))

