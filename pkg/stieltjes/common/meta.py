"""Stieltjes toolkit meta information.

Returns information about the toolkit itself, such as its package version.
"""

import importlib.metadata

try:
    _pkg_version = importlib.metadata.version("stieltjes")
except importlib.metadata.PackageNotFoundError:
    # Running from a source checkout that has not been installed
    _pkg_version = "0.0.0"
