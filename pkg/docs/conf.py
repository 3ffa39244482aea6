# -*- coding: utf-8 -*-

# (c) 2024 The gossipmon developers
#
# This file is a part of the Gossip Monoid Toolkit (gossipmon) project.
# USE, MODIFICATION, COPYING AND DISTRIBUTION OF THIS SOFTWARE IS SUBJECT TO
# THE TERMS AND CONDITIONS OF THE MIT LICENSE.  YOU SHOULD HAVE RECEIVED A COPY
# OF THE MIT LICENSE ALONG WITH THIS SOFTWARE; IF NOT, YOU CAN DOWNLOAD A COPY
# FROM HTTP://WWW.OPENSOURCE.ORG/.


import sys, os

# The package is documented from the source tree.
sys.path.insert(0, os.path.abspath('..'))
sys.path.append('.')

from gossipmon._version import get_version

# -- General configuration ----------------------------------------------------

needs_sphinx = '1.0'

extensions = [
    'sphinx.ext.doctest',
    'sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.mathjax'
]

# Both the class' and the __init__ method's docstring are inserted.
autoclass_content = 'both'

templates_path = ['_templates']
source_suffix = '.rst'
source_encoding = 'utf-8-sig'
master_doc = 'index'

project = u'gossipmon'
copyright = u'  2024  The gossipmon developers'

# The short X.Y version.
version = '.'.join(get_version().split('.')[:2])
# The full version, including alpha/beta/rc tags.
release = get_version()

exclude_patterns = ['_build']
add_function_parentheses = True
add_module_names = True
show_authors = False
pygments_style = 'sphinx'

# -- Options for HTML output --------------------------------------------------

html_theme = 'default'
html_theme_options = {'nosidebar': True}
html_short_title = 'Gossip Monoid Toolkit'
html_static_path = ['_static']
html_domain_indices = True
html_use_index = True
html_show_sourcelink = False
html_show_sphinx = False
html_show_copyright = True
htmlhelp_basename = 'GossipMonoidToolkitgossipmondoc'

# -- Options for LaTeX output -------------------------------------------------

latex_documents = [
  ('index', 'GossipMonoidToolkitgossipmon.tex',
   u'Gossip Monoid Toolkit (gossipmon) Documentation',
   u'The gossipmon developers', 'manual'),
]

# -- Options for manual page output -------------------------------------------

man_pages = [
    ('index', 'gossipmon', u'Gossip Monoid Toolkit (gossipmon) Documentation',
     [u'The gossipmon developers'], 1)
]
