"""
Configuration file for the Sphinx documentation builder.

# https://www.sphinx-doc.org/en/master/usage/configuration.html
"""

import os
import sys

import django

sys.path.insert(0, os.path.abspath(".."))  # noqa: PTH100
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings.local")
django.setup()


# Project information

project = "Spin Chern Lab"
copyright = "2024, Spin Chern Lab developers"  # noqa: A001
author = "Spin Chern Lab developers"

# General configs

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
]

templates_path = ["_templates"]
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]


# Options for HTML output

html_theme = "alabaster"
html_static_path = ["_static"]
