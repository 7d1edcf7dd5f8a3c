# Configuration file for the Sphinx documentation builder.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys
sys.path.insert(0, os.path.abspath('../..'))

import sphinx_rtd_theme


project = 'Schubstone'
copyright = '2021, Gilad Ben Dov'
author = 'Gilad Ben Dov'
release = '0.1'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx_rtd_theme'
]
autodoc_member_order = 'bysource'

templates_path = ['_templates']
exclude_patterns = []

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
