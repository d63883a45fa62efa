"""Build glue for the optional compiled kernel backend.

The package works without the extension (a pure-Python backend is selected
at import time); a failed compile therefore only costs speed.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "polyherglotz._fastkernels",
                ["src/polyherglotz/_fastkernels.pyx"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
