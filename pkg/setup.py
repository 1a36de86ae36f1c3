from setuptools import Extension, setup

# The compiled kernels are an optional speedup: if Cython (or a C compiler)
# is unavailable the package installs pure-Python and selects the fallback
# backend at import time.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "pfsym._native",
                ["src/pfsym/_native.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
