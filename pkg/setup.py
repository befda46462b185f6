"""Build the optional Cython kernel; the package works without it."""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("JLCERT_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("jlcert._kernels", ["src/jlcert/_kernels.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
