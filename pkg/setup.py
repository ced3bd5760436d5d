"""Build script: compiles the optional term-arithmetic extension.

The package is fully functional without the extension (a pure-Python kernel
with identical semantics is selected at import time), so any compilation
failure downgrades to a warning instead of aborting the install.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
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
            "warning: building chimukai._speedups failed (%s); "
            "falling back to the pure-Python kernel" % exc,
            file=sys.stderr,
        )


ext_modules = []
if os.environ.get("CHIMUKAI_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("chimukai._speedups", ["src/chimukai/_speedups.pyx"])],
            language_level=3,
        )
    except ImportError:
        print("warning: Cython not available; skipping compiled kernel", file=sys.stderr)

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
