"""
Miscellaneous helper functions for the workbench
"""
import subprocess

from pathlib import Path

import numpy as np

from common.lib.finsets import FinSet, FinFun
from common.lib.mealy import Cell, MealyMachine
import config


def get_software_version():
	"""
	Get current workbench version

	Reads a given version file and returns the first string found in there
	(up until the first space). On failure, return an empty string.

	If no version file is available, run `git show` to test if there is a git
	repository in the root folder, and if so, what commit is currently
	checked out in it.

	:return str:  Version
	"""
	versionpath = Path(config.PATH_ROOT, config.PATH_VERSION)

	if versionpath.exists() and not versionpath.is_file():
		return ""

	if not versionpath.exists():
		try:
			show = subprocess.run(["git", "show"], stderr=subprocess.PIPE, stdout=subprocess.PIPE, cwd=config.PATH_ROOT)
			if show.returncode != 0:
				raise ValueError()
			return show.stdout.decode("utf-8").split("\n")[0].split(" ")[1]
		except (subprocess.SubprocessError, IndexError, TypeError, ValueError, FileNotFoundError):
			return ""

	try:
		with open(versionpath, "r", encoding="utf-8", errors="ignore") as versionfile:
			return versionfile.readline().strip().split(" ")[0]
	except OSError:
		return ""


def convert_to_int(value, default=0):
	"""
	Convert a value to an integer, with a fallback

	:param value:  Value to convert
	:param int default:  Default value, if conversion not possible
	:return int:  Converted value
	"""
	try:
		return int(value)
	except (ValueError, TypeError):
		return default


def get_generator(seed=None):
	"""
	Random generator for the randomised suites

	:param int seed:  Seed; the configured default if omitted
	:return np.random.Generator:
	"""
	return np.random.default_rng(config.DEFAULT_SEED if seed is None else seed)


def _draw(rng, bound, shape):
	return np.asarray(rng.integers(0, bound, size=shape)).tolist()


def random_function(rng, dom, cod):
	"""
	:param np.random.Generator rng:
	:param FinSet dom:
	:param FinSet cod:
	:return FinFun:
	"""
	return FinFun(dom, cod, tuple(_draw(rng, cod.size, dom.size)))


def random_surjection(rng, dom, cod):
	"""
	Random surjection; the domain must be at least as large as the codomain

	:return FinFun:
	"""
	if dom.size < cod.size:
		raise ValueError("No surjection from a set of size %i onto one of size %i" % (dom.size, cod.size))

	table = list(range(cod.size)) + _draw(rng, cod.size, dom.size - cod.size)
	return FinFun(dom, cod, tuple(int(value) for value in rng.permutation(table)))


def random_machine(rng, input, output, states):
	"""
	Machine with uniformly drawn tables

	:param np.random.Generator rng:
	:param FinSet input:
	:param FinSet output:
	:param FinSet states:
	:return MealyMachine:
	"""
	shape = (input.size, states.size)
	d = tuple(tuple(row) for row in _draw(rng, states.size, shape)) if states.size else tuple(() for _ in input)
	s = tuple(tuple(row) for row in _draw(rng, output.size, shape)) if states.size else tuple(() for _ in input)
	return MealyMachine(input, output, states, d, s)


def random_cell_onto(rng, bottom, f, output_size, state_size):
	"""
	Random valid cell with a given bottom machine and left tight function

	The right tight function and the state map are drawn as surjections, and
	the top machine is built by picking, for every (a, e), a random preimage
	of the value the cell condition demands.

	:param np.random.Generator rng:
	:param MealyMachine bottom:  Bottom machine X ⇸ Y
	:param FinFun f:  Left tight function A → X
	:param int output_size:  Size of the top machine's output, at least |Y|
	:param int state_size:  Amount of top states, at least |E_bottom|
	:return Cell:
	"""
	g = random_surjection(rng, FinSet(output_size), bottom.output)
	alpha = random_surjection(rng, FinSet(state_size), bottom.states)

	def preimage(function, value):
		candidates = [element for element in function.dom if function(element) == value]
		return int(candidates[int(rng.integers(len(candidates)))])

	d, s = [], []
	for a in f.dom:
		d.append(tuple(preimage(alpha, bottom.d[f(a)][alpha(e)]) for e in alpha.dom))
		s.append(tuple(preimage(g, bottom.s[f(a)][alpha(e)]) for e in alpha.dom))

	top = MealyMachine(f.dom, g.dom, alpha.dom, tuple(d), tuple(s))
	return Cell(top, bottom, f, g, alpha)


def random_valid_cell(rng, max_size=3):
	"""
	Random valid cell with sets of size 1 to `max_size`

	:param np.random.Generator rng:
	:param int max_size:
	:return Cell:
	"""
	size = lambda: int(rng.integers(1, max_size + 1))
	bottom = random_machine(rng, FinSet(size()), FinSet(size()), FinSet(size()))
	f = random_function(rng, FinSet(size()), bottom.input)
	return random_cell_onto(rng, bottom, f, bottom.output.size + int(rng.integers(0, 2)), bottom.states.size + int(rng.integers(0, 2)))


def random_grid(rng, max_size=2):
	"""
	Random 2×2 grid of composable cells

	The bottom row is drawn first; the top row is then drawn onto the top
	machines of the bottom row, sharing the middle tight function.

	:param np.random.Generator rng:
	:param int max_size:
	:return tuple:  ((upper left, upper right), (lower left, lower right))
	"""
	size = lambda: int(rng.integers(1, max_size + 1))
	grow = lambda base: base + int(rng.integers(0, 2))

	first = random_machine(rng, FinSet(size()), FinSet(size()), FinSet(size()))
	second = random_machine(rng, first.output, FinSet(size()), FinSet(size()))

	lower_left = random_cell_onto(rng, first, random_function(rng, FinSet(size()), first.input), grow(first.output.size), grow(first.states.size))
	lower_right = random_cell_onto(rng, second, lower_left.g, grow(second.output.size), grow(second.states.size))

	upper_left = random_cell_onto(rng, lower_left.top, random_function(rng, FinSet(size()), lower_left.top.input),
								  grow(lower_left.top.output.size), grow(lower_left.top.states.size))
	upper_right = random_cell_onto(rng, lower_right.top, upper_left.g, grow(lower_right.top.output.size), grow(lower_right.top.states.size))

	return (upper_left, upper_right), (lower_left, lower_right)
