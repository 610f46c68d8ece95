"""Build script: compiles the optional elimination-kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time), so any failure here should not block installation.  Set
SOFICRANK_SKIP_EXT=1 to skip the compile step entirely.
"""

import os

from setuptools import setup


def _extensions():
    if os.environ.get("SOFICRANK_SKIP_EXT"):
        return []
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        return []
    ext = Extension(
        "soficrank._fastrank",
        ["src/soficrank/_fastrank.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=_extensions())
