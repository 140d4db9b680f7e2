"""Build script: compiles the optional scoring extension.

The package works without the extension (pure-Python kernels are selected
at import time), so any build failure here degrades to a source-only
install instead of aborting.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible, otherwise fall back silently."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - any toolchain failure is non-fatal
            print(f"warning: skipping compiled kernels ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: could not compile {ext.name} ({exc}); using pure-Python fallback")


ext_modules = []
if os.environ.get("PSCKIT_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("psckit._speedups", ["src/psckit/_speedups.pyx"])],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
