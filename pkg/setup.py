from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The compiled kernels are optional: redword.kernels falls back to the pure
# Python implementation when the extension is missing.
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "redword._speedups",
                ["src/redword/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
