"""
MealyBench command line front end

Every command found in the commands folder becomes a subcommand; its
documents become positional arguments and its options become flags. The
report is printed to stdout as JSON, and the exit status tells whether a
violation (1), an input error (2) or a construction bug (3) was found.
"""
import argparse
import sys

import config

from backend import all_modules
from common.lib.documents import dump_report
from common.lib.exceptions import CommandParametersException
from common.lib.helpers import get_software_version
from common.lib.logger import Logger
from common.lib.user_input import UserInput


def add_command_parser(subparsers, command, parent):
	"""
	Register a subcommand for a command class

	:param subparsers:  argparse subparser collection
	:param command:  BasicCommand subclass
	:param parent:  Parser with the arguments shared by all subcommands
	"""
	parser = subparsers.add_parser(command.type, parents=[parent], help=command.title, description=command.description)

	for name, settings in command.documents.items():
		if settings.get("many"):
			nargs = "+" if settings.get("required", True) else "*"
		else:
			nargs = None if settings.get("required", True) else "?"

		kinds = "/".join(settings["kinds"])
		parser.add_argument(name.replace("-", "_"), nargs=nargs, metavar=name.upper(),
							help="%s (%s; - reads stdin)" % (settings.get("help", name), kinds))

	for name, settings in command.get_options().items():
		if settings["type"] == UserInput.OPTION_INFO:
			continue

		help = settings.get("help", "")
		if settings["type"] == UserInput.OPTION_TOGGLE:
			parser.add_argument("--%s" % name, action="store_true", default=None, help=help)
			continue

		if settings["type"] == UserInput.OPTION_CHOICE:
			help += " (one of: %s)" % ", ".join(settings["options"])

		if settings.get("default") is not None:
			help += " [default: %s]" % settings["default"]

		# values are validated by UserInput, so errors end up in the report
		parser.add_argument("--%s" % name, default=None, help=help)


def build_parser():
	"""
	Build the argument parser with one subcommand per collected command

	:return argparse.ArgumentParser:
	"""
	parent = argparse.ArgumentParser(add_help=False)
	parent.add_argument("--format", choices=["json"], default="json", help="Report format")
	parent.add_argument("--verbose", "-v", action="store_true", default=False, help="Echo log messages to stderr")

	cli = argparse.ArgumentParser(prog="mealybench", description="Finite-model workbench for Mealy machines as a double category")
	cli.add_argument("--version", action="version", version="%(prog)s " + (get_software_version() or "unknown"))
	subparsers = cli.add_subparsers(dest="command", metavar="command")
	subparsers.required = True

	for command in all_modules.commands.values():
		add_command_parser(subparsers, command, parent)

	return cli


def main(argv=None, stdin=None, stdout=None):
	"""
	Run a subcommand and print its report

	:param list argv:  Arguments; defaults to sys.argv
	:param stdin:  Stream `-` documents are read from
	:param stdout:  Stream the report is written to
	:return int:  Exit status
	"""
	stdin = stdin if stdin is not None else sys.stdin
	stdout = stdout if stdout is not None else sys.stdout

	args = vars(build_parser().parse_args(argv))
	command = all_modules.load_command_class(args.pop("command"))
	log = Logger(output=args.pop("verbose"))
	args.pop("format")

	try:
		instance = command.from_arguments(log, args, stdin=stdin)
	except CommandParametersException as e:
		log.warning("Invalid option for command %s: %s" % (command.type, str(e)))
		print(dump_report({"error": "input", "message": str(e), "path": e.path}), file=stdout)
		return command.EXIT_INPUT

	try:
		status, report = instance.run()
	except KeyboardInterrupt:
		log.info("Interrupted by user during command %s" % command.type)
		return 130

	print(dump_report(report), file=stdout)
	return status


if __name__ == "__main__":
	sys.exit(main())
