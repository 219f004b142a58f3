"""Build script for the optional compiled scan kernels.

The package works without the extension (a pure-Python implementation of the
same kernels is selected at import time); building it just makes the
exhaustive axiom scans much faster on larger inputs.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # no Cython available: install pure-Python only
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("bicatkit._core", ["src/bicatkit/_core.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
