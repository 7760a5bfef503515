"""Build script for the compiled kernel extension.

The extension is optional: if it fails to build (no compiler, no Cython),
the package installs anyway and falls back to the pure-Python kernels at
import time.  Force a pure install with NGBOUNDS_NO_EXT=1.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("NGBOUNDS_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext = Extension(
            "ngbounds._kernels",
            ["src/ngbounds/_kernels.pyx"],
        )
        ext.optional = True
        ext_modules = cythonize([ext], language_level=3)
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
