from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to the pure-Python
# implementation in dualwave._kernels._pyfallback when the extension is absent.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "dualwave._kernels._core",
                ["src/dualwave/_kernels/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
