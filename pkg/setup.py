"""Build script: compiles the Cython hot-loop kernels.

The package works without the extension (a NumPy fallback is selected at
import time), so a failed compile only costs speed.  ``-ffast-math`` is
deliberately avoided: the kernels must stay IEEE-754 faithful so that both
backends agree to rounding error.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # building from an sdist without Cython
    cythonize = None

extensions = [
    Extension(
        "turanlocal._kernels",
        ["src/turanlocal/_kernels.pyx"],
        extra_compile_args=["-O3"],
    )
]

if cythonize is not None:
    ext_modules = cythonize(extensions, compiler_directives={"language_level": "3"})
else:
    ext_modules = []

setup(ext_modules=ext_modules)
