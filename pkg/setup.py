"""Build script for the optional compiled matching kernel.

The package is fully functional without the extension: ``swissfair.matching``
falls back to the pure-Python kernel when the compiled module is absent.
Set SWISSFAIR_SKIP_EXTENSION=1 to force a pure-Python build.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SWISSFAIR_SKIP_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "swissfair.matching._blossom_cy",
                    ["src/swissfair/matching/_blossom_cy.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
