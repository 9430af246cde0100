import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("MERSROOT_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "mersroot._speedups",
                    ["src/mersroot/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython: install the pure-Python kernels only.
        ext_modules = []

setup(ext_modules=ext_modules)
