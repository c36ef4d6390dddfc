# Configuration file for the Sphinx documentation builder.
#
# For a full list of options see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

# the library and the commands are imported from the repository root
import os
import sys
sys.path.insert(0, os.path.abspath('..'))


# -- Project information -----------------------------------------------------
project = 'MealyBench'
copyright = '2026, MealyBench contributors'
author = 'MealyBench contributors'

with open(os.path.join(os.path.abspath('..'), 'VERSION')) as version_file:
    release = version_file.readline().strip()


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    "sphinx.ext.napoleon",
    'm2r2',
    'sphinx.ext.intersphinx'
]

templates_path = ['_templates']

exclude_patterns = []

source_suffix = [".rst", ".md"]

autodoc_default_options = {
    "member-order": "bysource"
}


intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "networkx": ("https://networkx.org/documentation/stable", None)
}

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'

html_static_path = ['_static']
