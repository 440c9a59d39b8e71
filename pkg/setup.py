"""Build script for the optional Cython kernels.

The package works without them: ``quantgraph.kernels`` falls back to the
numpy implementation when the extension is missing.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("QUANTGRAPH_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "quantgraph._ckernels",
                    ["src/quantgraph/_ckernels.pyx"],
                    extra_compile_args=["-O3", "-fcx-limited-range"] if os.name != "nt" else [],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
