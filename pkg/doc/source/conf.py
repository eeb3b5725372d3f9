# -*- coding: utf-8 -*-
#
# containment_lab documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing
# dir.

from __future__ import unicode_literals

import os
import sys

import pbr.version


sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__),
                '..', '..')))

# NOTE(containment_lab): Needed for the list-plugins directive.
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__),
                '..')))

# -- General configuration ----------------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.coverage',
              'sphinx.ext.intersphinx',
              'sphinx.ext.mathjax',
              'ext.list_plugins',
              ]

source_suffix = '.rst'
master_doc = 'index'

project = 'containment_lab'
copyright = 'Containment Lab Developers'

version_info = pbr.version.VersionInfo('containment_lab')
version = version_info.version_string()
release = version_info.release_string()

exclude_trees = []
add_function_parentheses = True
add_module_names = True
pygments_style = 'sphinx'
modindex_common_prefix = ['containment_lab.']

# -- Options for HTML output --------------------------------------------------

htmlhelp_basename = 'containmentlabdoc'

latex_documents = [
    ('index', 'containment_lab.tex',
     'containment_lab Documentation',
     'Containment Lab Developers',
     'manual'),
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
}
