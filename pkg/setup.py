import numpy
from setuptools import Extension, setup

# The compiled kernels are optional: the package falls back to the pure
# Python implementations when the extension is absent.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "idemgraph._ckernels",
                ["src/idemgraph/_ckernels.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
