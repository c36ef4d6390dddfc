"""
MealyBench configuration

Every setting below can be overridden from the [mealybench] section of the
ini file named in CONFIG_FILE, if that file exists.
"""
import configparser
import os

from pathlib import Path

# root of the workbench, used to resolve relative paths
PATH_ROOT = str(Path(__file__).parent.resolve())

# file holding the version string, relative to PATH_ROOT
PATH_VERSION = "VERSION"

# log files are written to this folder, relative to PATH_ROOT
PATH_LOGS = "logs"

# minimum level of messages written to the log file
LOG_LEVEL = "INFO"

# default maximum word length for claims about A*
WORD_BOUND = 4

# default truncation of free monads (maximum length of state words)
FREE_MONAD_BOUND = 3

# maximum word length used to spot-check the letterwise module axioms
MODULE_WORD_BOUND = 3

# seed for randomised suites - never derived from the clock
DEFAULT_SEED = 0

# enumerate_monads refuses table spaces larger than this
ENUMERATION_BUDGET = 10 ** 7

# state bound for the bounded negative searches
SEARCH_MAX_STATES = 2

# amount of threads a ShardManager spreads a candidate space over
MAX_WORKERS = 1

# indentation of JSON reports; None gives one report per line
REPORT_INDENT = None

# optional override file
CONFIG_FILE = os.environ.get("MEALYBENCH_CONFIG", "mealybench.ini")

_overrides = Path(PATH_ROOT, CONFIG_FILE)
if _overrides.exists():
	_parser = configparser.ConfigParser()
	_parser.read(_overrides)

	if _parser.has_section("mealybench"):
		_section = _parser["mealybench"]
		PATH_LOGS = _section.get("path_logs", PATH_LOGS)
		LOG_LEVEL = _section.get("log_level", LOG_LEVEL).upper()
		WORD_BOUND = _section.getint("word_bound", WORD_BOUND)
		FREE_MONAD_BOUND = _section.getint("free_monad_bound", FREE_MONAD_BOUND)
		MODULE_WORD_BOUND = _section.getint("module_word_bound", MODULE_WORD_BOUND)
		DEFAULT_SEED = _section.getint("default_seed", DEFAULT_SEED)
		ENUMERATION_BUDGET = _section.getint("enumeration_budget", ENUMERATION_BUDGET)
		SEARCH_MAX_STATES = _section.getint("search_max_states", SEARCH_MAX_STATES)
		MAX_WORKERS = max(1, _section.getint("max_workers", MAX_WORKERS))
		if _section.get("report_indent"):
			REPORT_INDENT = _section.getint("report_indent")
