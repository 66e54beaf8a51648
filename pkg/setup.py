"""Build hook for the optional compiled kernels.

The extension needs Cython and a C compiler; when either is missing the
install falls back to the pure-Python kernels, which implement the same
interface (selected at import in permsum._backend).  Set PERMSUM_NO_EXT
to skip the extension build entirely.

Build in place for development with:

    python setup.py build_ext --inplace
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Treat extension build failures as a degraded install, not an error."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"warning: building permsum._speedups failed ({exc}); "
              "the pure-Python kernels will be used")


ext_modules = []
if not os.environ.get("PERMSUM_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("permsum._speedups", ["src/permsum/_speedups.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        print("warning: Cython not available; skipping permsum._speedups")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
