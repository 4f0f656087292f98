# -*- coding: utf-8 -*-
#
# Sphinx configuration for the freebycyclic documentation: the narrative
# guide to spec files and reports, and the API reference built with
# autodoc from src/freebycyclic.
import os
import re

_here = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(_here, '..', '..', 'src', 'freebycyclic',
                       '__init__.py')) as _init:
    _version = re.search(r"^__version__ = '([^']+)'", _init.read(),
                         re.MULTILINE).group(1)


# -- General configuration ------------------------------------------------

rst_epilog = """
.. |freebycyclic| replace:: :mod:`freebycyclic`
"""

# doctest runs the examples of the user guide.
extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.coverage',
    'sphinx-prompt',
]

source_suffix = '.rst'
master_doc = 'index'

project = u'freebycyclic'
copyright = u'2026, The freebycyclic developers'
author = u'The freebycyclic developers'

# Both come from freebycyclic.__version__.
version = u'.'.join(_version.split('.')[:2])
release = _version

language = 'en'
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = False


# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'freebycyclicdoc'


# -- Options for LaTeX, manual page and Texinfo output --------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'freebycyclic.tex', u'freebycyclic Documentation',
     author, 'manual'),
]

man_pages = [
    (master_doc, 'freebycyclic',
     u'Growth and thickness of free-by-cyclic groups', [author], 1)
]

texinfo_documents = [
    (master_doc, 'freebycyclic', u'freebycyclic Documentation',
     author, 'freebycyclic', 'Growth and thickness of free-by-cyclic groups.',
     'Mathematics'),
]


# Reports and certificates link to the libraries doing the numerical work.
intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
    'networkx': ('https://networkx.org/documentation/stable/', None),
}
