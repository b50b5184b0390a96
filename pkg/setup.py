"""Build hook for the optional compiled matching kernel.

The package is pure Python plus one Cython extension; when Cython (or a C
compiler) is unavailable the extension is skipped and the pure twin in
edgepow.kernels._pure is used at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/edgepow/kernels/_blossom.pyx"],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
