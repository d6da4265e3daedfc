"""Build script for the optional compiled kernels.

The package works without the extension (a pure-Python fallback is selected
at import time); the extension just makes the two iterative optimizers fast.
"""
from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "sepkit._core",
                sources=["src/sepkit/_core.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
