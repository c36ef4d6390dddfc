from setuptools import setup

with open("README.md", 'r') as readmefile:
	readme = readmefile.read()

with open("VERSION") as versionfile:
	version = versionfile.readline().strip()

# Universal packages
packages = [
	"networkx>=2.5.1",
	"numpy>=1.19.2"
]

# Test suite
test_packages = [
	"hypothesis>=6.0",
	"pytest>=6.2"
]

setup(
	name='mealybench',
	version=version,
	description=('MealyBench is a finite-model workbench for Mealy machines '
				 'as a double category, their monads, modules and universal constructions'),
	long_description=readme,
	long_description_content_type="text/markdown",
	packages=['backend', 'backend.abstract', 'backend.lib', 'backend.workers', 'common', 'common.lib'],
	py_modules=['config', 'mealybench'],
	python_requires='>=3.8',
	install_requires=packages,
	extras_require={"test": test_packages},
)
