"""Optional compiled kernel; the package falls back to pure Python when it is absent."""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("DEGENLAB_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(["src/degenlab/solver/_ckernel.pyx"], language_level=3, quiet=True)

setup(ext_modules=ext_modules)
