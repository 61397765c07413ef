"""Build script: compiles the optional cycle-kernel extension.

The package works without the extension (a pure-Python fallback is
selected at import time); set DJTURAN_NO_EXTENSION=1 to skip compilation
entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Never fail the install because the extension would not compile."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: skipping compiled kernels ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc})")


ext_modules = []
cmdclass = {}
if os.environ.get("DJTURAN_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "djturan._cycle_kernels",
                    ["src/djturan/_cycle_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
        cmdclass["build_ext"] = optional_build_ext
    except ImportError:
        print("warning: Cython not available, using pure-Python kernels")

setup(ext_modules=ext_modules, cmdclass=cmdclass)
