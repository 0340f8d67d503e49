"""Build hook for the optional compiled kernel.

The package is pure Python; `ratcurve._kernel._fast` is a Cython-compiled twin
of `ratcurve._kernel._pure` and is used automatically when the build succeeds.
A failed extension build must never block installation.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [
            Extension(
                "ratcurve._kernel._fast",
                ["src/ratcurve/_kernel/_fast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception:
    extensions = []

setup(ext_modules=extensions)
