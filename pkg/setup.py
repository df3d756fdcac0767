"""Builds the compiled solver kernels.

The package works without the extension (a pure-numpy fallback is selected
at import time), so a failed build is downgraded to a warning.
"""

import sys

from setuptools import Extension, setup


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("icr: Cython not available, building without compiled kernels",
              file=sys.stderr)
        return []
    ext = Extension(
        "icr._ckernels",
        ["src/icr/_ckernels.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions())
