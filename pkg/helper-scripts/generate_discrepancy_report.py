"""
Report where the free monad tables disagree with the literal recursions

For every machine A ⇸ A read from the input (a machine document, or a bundle
of them), the truncated free monad is built with the threaded interpretation
and compared with the literal one. With --all-machines the report instead
covers every endomachine with the given alphabet and state bounds, which is
how the disagreement was first found.

The output is one JSON report per machine, on stdout. The report for
`--all-machines --bound 2` is kept in docs/free-monad-discrepancies.jsonl and
the test suite checks that it is still current.
"""
import argparse
import sys
import os

sys.path.insert(0, os.path.abspath(os.path.dirname(__file__)) + "/..")
import config

from common.lib.documents import dump_report, parse_document, to_document
from common.lib.finsets import FinSet
from common.lib.mealy import enumerate_machines
from common.lib.monads import FreeMonadConfig, free_monad, free_monad_law_search

# parse parameters
cli = argparse.ArgumentParser()
cli.add_argument("-i", "--input", default="-", help="Machine document or bundle to read; - reads stdin")
cli.add_argument("-b", "--bound", type=int, default=config.FREE_MONAD_BOUND, help="Longest state word")
cli.add_argument("-a", "--all-machines", action="store_true", help="Check every endomachine up to --alphabet and --states instead")
cli.add_argument("--alphabet", type=int, default=2, help="Largest alphabet with --all-machines")
cli.add_argument("--states", type=int, default=2, help="Largest amount of states with --all-machines")
cli.add_argument("-l", "--law-search", action="store_true", help="Also list the verdicts of all eight interpretations")
args = cli.parse_args()

if args.all_machines:
	machines = []
	for size in range(1, args.alphabet + 1):
		machines.extend(enumerate_machines(FinSet(size), FinSet(size), args.states, min_states=1))
else:
	machines = parse_document(args.input, kinds=["machine"])
	if not isinstance(machines, list):
		machines = [machines]

disagreeing = 0
for machine in machines:
	if not machine.is_endo:
		print("Skipping machine with |A| = %i, |B| = %i: not an endomorphism" % (machine.input.size, machine.output.size), file=sys.stderr)
		continue

	free = free_monad(machine, FreeMonadConfig(bound=args.bound))
	report = {"machine": to_document(machine), **free.discrepancy}
	if args.law_search:
		report["interpretations"] = [{"interpretation": cfg.as_dict(), **verdict.to_json()}
									 for cfg, verdict in free_monad_law_search(machine, args.bound)]

	if free.discrepancy["difference_count"]:
		disagreeing += 1

	print(dump_report(report))

print("%i of %i machines differ from the literal recursions" % (disagreeing, len(machines)), file=sys.stderr)
