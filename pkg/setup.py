"""Build script for the compiled kernel extension.

The package works without the extension (a pure-numpy fallback is selected
at import time), but the compiled kernels are what make large Monte Carlo
studies practical.
"""

import numpy
from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "wavecal._kernels",
        ["src/wavecal/_kernels.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
]

setup(ext_modules=cythonize(extensions, language_level="3"))
