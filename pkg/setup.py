import os

from setuptools import Extension, setup

# The compiled kernels are an optional accelerator: without Cython (or with
# BFREE_NO_EXT=1) the package installs pure-Python only and selects the
# fallback backend at import time.
ext_modules = []
if os.environ.get("BFREE_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "bfree_toeplitz.kernels._fast",
                    ["src/bfree_toeplitz/kernels/_fast.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
