"""Build hook for the optional compiled rational kernel.

Set CENDLAB_NO_EXT=1 to skip the extension; the package then runs on the
pure-Python fallback (fractions.Fraction).
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("CENDLAB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/cendlab/_speedups.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
