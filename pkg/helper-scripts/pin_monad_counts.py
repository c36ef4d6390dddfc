"""
Print the amount of monads for small alphabet and state sizes

Used to pin the counts asserted in the test suite; the output for the default
sizes is kept in docs/monad-counts.json. Sizes whose candidate
space exceeds the budget are listed with their estimate instead of a count.
"""
import argparse
import json
import sys
import os

sys.path.insert(0, os.path.abspath(os.path.dirname(__file__)) + "/..")
import config

from backend.lib.manager import ShardManager
from common.lib.exceptions import BudgetExceededException
from common.lib.logger import Logger
from common.lib.monads import enumerate_monads

# parse parameters
cli = argparse.ArgumentParser()
cli.add_argument("--alphabet", type=int, default=2, help="Largest alphabet size")
cli.add_argument("--states", type=int, default=2, help="Largest amount of states")
cli.add_argument("--budget", type=int, default=config.ENUMERATION_BUDGET, help="Candidate budget per size")
cli.add_argument("--workers", type=int, default=config.MAX_WORKERS, help="Amount of threads")
args = cli.parse_args()

log = Logger(output=True, filename="pin_monad_counts.log")
manager = ShardManager(log, max_workers=args.workers)

counts = []
for alphabet_size in range(1, args.alphabet + 1):
	for state_size in range(1, args.states + 1):
		try:
			monads = enumerate_monads(alphabet_size, state_size, budget=args.budget, mapper=manager)
		except BudgetExceededException as e:
			log.warning("Skipping |A| = %i, |E| = %i: %s" % (alphabet_size, state_size, e))
			counts.append({"alphabet": alphabet_size, "states": state_size, "count": None, "estimate": e.estimate})
			continue

		log.info("|A| = %i, |E| = %i: %i monads" % (alphabet_size, state_size, len(monads)))
		counts.append({"alphabet": alphabet_size, "states": state_size, "count": len(monads)})

print(json.dumps(counts, indent=config.REPORT_INDENT))
