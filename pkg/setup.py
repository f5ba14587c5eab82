"""Build script: compiles the optional Lindblad kernel extension.

The compiled kernel is a performance add-on; if Cython or a C compiler is
unavailable the install proceeds and the package falls back to the pure
numpy kernel at import time.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


def _extensions():
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        return []
    ext = Extension(
        "cqedsim._kernels._lindblad",
        sources=["src/cqedsim/_kernels/_lindblad.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level=3)


class optional_build_ext(build_ext):
    """Build the extension if possible, otherwise continue without it."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"warning: compiled kernel unavailable ({exc}); "
            "falling back to the pure-Python kernel",
            file=sys.stderr,
        )


setup(ext_modules=_extensions(), cmdclass={"build_ext": optional_build_ext})
