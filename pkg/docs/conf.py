# Sphinx configuration for associative-geometry.
import os
import subprocess
import sys

import sphinx_rtd_theme


# The package and this directory must be importable for autodoc
sys.path.insert(0, os.path.abspath('.'))
sys.path.insert(0, os.path.abspath('..'))


def _shell_stdout(cmd):
    """Runs a shell command and returns stdout"""
    ret = subprocess.run(cmd, shell=True, check=True, stdout=subprocess.PIPE)
    return ret.stdout.decode('utf-8').strip()


extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
]
autodoc_member_order = 'bysource'

source_suffix = '.rst'
master_doc = 'toc'
default_role = 'any'

project = 'associative-geometry'
copyright = '2026, associative-geometry contributors'
author = 'associative-geometry contributors'

# Version comes from pyproject.toml
version = _shell_stdout("poetry version | rev | cut -f 1 -d' ' | rev")
release = version

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
htmlhelp_basename = 'associative-geometry-doc'

man_pages = [
    (
        master_doc,
        'assocgeom',
        'Associative geometries of subspaces',
        [author],
        1,
    )
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'sympy': ('https://docs.sympy.org/latest', None),
}
