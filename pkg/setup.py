from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    # optional=True: a failed compile falls back to the pure-Python kernels
    ext_modules = cythonize(
        [
            Extension(
                "eideal._speedups",
                ["src/eideal/_speedups.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
