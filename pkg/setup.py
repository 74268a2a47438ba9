"""Build the optional compiled kernels; the package still imports without them."""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("GRAPHBURN_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "graphburn._kernels._ckernels",
                    ["src/graphburn/_kernels/_ckernels.pyx"],
                    language="c++",
                    extra_compile_args=["-O3", "-std=c++17"],
                    optional=True,  # fall back to pure Python if the compiler fails
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
