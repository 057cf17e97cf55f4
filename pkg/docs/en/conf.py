# Configuration file for the Sphinx documentation builder.
#
# For the full list of options see
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys
import sphinx_rtd_theme
sys.path.insert(0, os.path.abspath('../../'))


# -- Project information -----------------------------------------------------

project = 'gradelogic'
copyright = '2026, gradelogic contributors'
author = 'gradelogic contributors'


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
    'sphinx.ext.doctest',
    'myst_parser',
    'sphinx_copybutton',
]  # yapf: disable
autodoc_typehints = 'description'
myst_heading_anchors = 4

master_doc = 'index'
source_suffix = ['.rst', '.md']

templates_path = ['_templates']

htmlhelp_basename = 'gradelogic'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

# -- Extension configuration -------------------------------------------------
# Ignore >>> when copying code

copybutton_prompt_text = r'>>> |\.\.\. '
copybutton_prompt_is_regexp = True
