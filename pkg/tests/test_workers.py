import pytest

from backend.lib.manager import ShardManager
from common.lib.monads import enumerate_monads
from common.lib.verdict import Verdict


def fail_on_three(value):
	if value == 3:
		raise ValueError("three")

	return value


class TestShardManager:
	def test_shards_are_contiguous(self, logger):
		shards = ShardManager(logger, max_workers=3).shards(list(range(10)))
		assert [offset for offset, shard in shards] == [0, 4, 7]
		assert [len(shard) for offset, shard in shards] == [4, 3, 3]

	def test_no_candidates(self, logger):
		manager = ShardManager(logger, max_workers=4)
		assert manager.shards([]) == []
		assert manager.map(str, []) == []

	@pytest.mark.parametrize("workers", [1, 2, 5, 20])
	def test_results_keep_candidate_order(self, logger, workers):
		assert ShardManager(logger, max_workers=workers).map(lambda x: x * x, range(10)) == [x * x for x in range(10)]

	def test_callable_like_map(self, logger):
		assert ShardManager(logger, max_workers=2)(abs, [-1, 2, -3]) == [1, 2, 3]

	def test_collect(self, logger):
		assert ShardManager(logger, max_workers=3).collect(range(10), lambda x: x % 3 == 0) == [0, 3, 6, 9]

	def test_first_witness(self, logger):
		check = lambda x: Verdict.ok() if x < 5 else Verdict.fail("small", value=x)
		index, candidate, verdict = ShardManager(logger, max_workers=3).first_witness(range(8), check)
		assert (index, candidate) == (5, 5)
		assert verdict.witness == {"value": 5}

		assert ShardManager(logger, max_workers=3).first_witness(range(5), check) is None

	def test_errors_reach_the_caller(self, logger):
		with pytest.raises(ValueError):
			ShardManager(logger, max_workers=2).map(fail_on_three, range(6))

	def test_enumeration_does_not_depend_on_workers(self, logger):
		assert enumerate_monads(2, 2, mapper=ShardManager(logger, max_workers=3)) == enumerate_monads(2, 2)
