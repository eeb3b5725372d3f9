# -*- coding: utf-8 -*-
#
# containment_lab Release Notes documentation build configuration file.

import pbr.version

extensions = [
    'reno.sphinxext',
]

source_suffix = '.rst'
master_doc = 'index'

project = u'containment_lab Release Notes'
copyright = u'Containment Lab Developers'

lab_version = pbr.version.VersionInfo('containment_lab')
release = lab_version.version_string_with_vcs()
version = lab_version.canonical_version_string()

exclude_patterns = []
pygments_style = 'sphinx'
html_theme = 'default'
htmlhelp_basename = 'containmentlabReleaseNotesdoc'

latex_documents = [
    ('index', 'containmentlabReleaseNotes.tex',
     u'containment_lab Release Notes Documentation',
     u'Containment Lab Developers', 'manual'),
]

locale_dirs = ['locale/']
