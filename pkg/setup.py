"""Build script for the optional compiled likelihood kernels.

The package is fully functional without the extension (a numpy fallback is
selected at import time); the extension just makes the count-model fitting
loops faster. If Cython or a C toolchain is unavailable the build silently
proceeds pure-Python.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "occshift.regression._fastfam",
                ["src/occshift/regression/_fastfam.pyx"],
                include_dirs=[numpy.get_include()],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
