"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-Python twin of the kernel
module is selected at import time), so any failure here should not block
installation: build with MECSIZE_SKIP_EXT=1 to force a pure-Python install.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("MECSIZE_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("mecsize._kernels_cy", ["src/mecsize/_kernels_cy.pyx"])],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
