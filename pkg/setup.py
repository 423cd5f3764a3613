import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "designcodes.kernels._speed",
                ["src/designcodes/kernels/_speed.pyx"],
                extra_compile_args=["-O3"],
                include_dirs=[numpy.get_include()],
            )
        ],
        language_level=3,
    )
except ImportError:
    # no Cython: install the pure numpy kernels only
    extensions = []

setup(ext_modules=extensions)
