# Sphinx configuration for the boundary-scaling documentation.

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

from boundary_scaling import __version__  # noqa: E402

project = "boundary-scaling"
copyright = "2026, boundary-scaling contributors"
author = "boundary-scaling contributors"
release = __version__

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "myst_nb",
    "sphinx_copybutton",
]

nb_execution_mode = "off"
myst_enable_extensions = ["amsmath", "dollarmath"]

# Docstrings are Google style with "Example:" sections
napoleon_google_docstring = True
napoleon_numpy_docstring = False
napoleon_use_admonition_for_examples = True
napoleon_attr_annotations = True

autodoc_default_options = {
    "members": True,
    "member-order": "bysource",
    "undoc-members": False,
}
autodoc_typehints = "description"
autodoc_typehints_description_target = "documented"
# SVG rendering is optional at import time
autodoc_mock_imports = ["matplotlib"]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "pandas": ("https://pandas.pydata.org/docs/", None),
}

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
source_suffix = {
    ".rst": "restructuredtext",
    ".md": "myst-nb",
}
master_doc = "index"

html_theme = "furo"
html_title = "boundary-scaling"
html_theme_options = {
    "light_css_variables": {
        "color-brand-primary": "#0f766e",
        "color-brand-content": "#0f766e",
    },
    "dark_css_variables": {
        "color-brand-primary": "#5eead4",
        "color-brand-content": "#5eead4",
    },
    "navigation_with_keys": True,
}
html_show_sourcelink = False
