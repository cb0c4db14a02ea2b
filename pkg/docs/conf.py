import os
import sys
from importlib.metadata import PackageNotFoundError, version as get_version

# The package and the local extensions are imported from the checkout.
sys.path.insert(0, os.path.abspath('..'))
sys.path.append(os.path.abspath('extensions'))

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosectionlabel",
    "sphinx.ext.extlinks",
    "sphinx.ext.intersphinx",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    "sphinx.ext.mathjax",
    "sphinxcontrib_trio",
    "exception_hierarchy",
    "myst_parser",
    "sphinx_copybutton",
    "sphinxext.opengraph",
    "sphinx_autodoc_typehints",
]

always_document_param_types = False
autosectionlabel_prefix_document = True

autodoc_member_order = "bysource"
autodoc_typehints = "none"
napoleon_numpy_docstring = True
napoleon_google_docstring = False

extlinks = {
    "issue": ("https://github.com/DA-344/essring/issues/%s", "GH-%s"),
}
intersphinx_mapping = {
    "py": ("https://docs.python.org/3", None),
    "sympy": ("https://docs.sympy.org/latest/", None),
    "click": ("https://click.palletsprojects.com/en/stable/", None),
}

source_suffix = {
    ".rst": "restructuredtext",
}

master_doc = "index"

project = "essring"
copyright = "2024-present, DA344"

try:
    release = get_version("essring")
except PackageNotFoundError:
    release = "1.0.0a"
version = ".".join(release.split(".")[:2])

html_title = f"{project} v{version} Documentation"

language = "en"

exclude_patterns = ["_build", "build"]

pygments_style = "friendly"

html_theme = "furo"
html_context = {}
html_theme_options = {
    "source_repository": "https://github.com/DA-344/essring",
    "source_branch": "master",
    "source_directory": "docs/",
}

html_search_language = "en"

man_pages = [
    ('index', 'essring', 'essring Documentation',
     ['DA344'], 1)
]
