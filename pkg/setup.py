"""Build script for the optional compiled kernel.

The C extension only accelerates the longest-common-subsequence inner loop;
everything works without it.  If Cython or a C compiler is missing, the build
warns and the package falls back to the pure-Python kernel at import time.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Tolerate a failed extension build instead of aborting the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"warning: building the compiled kernel failed ({exc}); "
            "simscan will use the pure-Python fallback",
            file=sys.stderr,
        )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("simscan._speedups", ["src/simscan/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
