# Configuration file for the Sphinx documentation builder.
#
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.insert(0, os.path.abspath(os.path.join(os.path.pardir, "src")))

# -- Project information -----------------------------------------------------

project = 'ltlc'
copyright = "2026, ltlc developers"
author = 'ltlc developers'

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.autosummary',
    'sphinx.ext.intersphinx',
    'numpydoc'
]

add_module_names = False
# Generate the API documentation when building
autosummary_generate = True
numpydoc_show_class_members = False

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'

intersphinx_mapping = {
    'numpy': ('https://numpy.org/doc/stable/', None),
    'networkx': ('https://networkx.org/documentation/stable/', None),
}

# set index.rst as the master doc
master_doc = 'index'

# include __init__ in docs
autoclass_content = 'both'
