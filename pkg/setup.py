"""Build script for the optional compiled kernels.

The package is pure Python plus one small Cython accelerator for the
associativity scan.  If Cython or a C compiler is unavailable the build
falls back to the numpy kernels selected at import time, so the extension
is strictly optional.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Try to build the accelerator; never fail the install over it."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain dependent
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain dependent
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(f"warning: compiled kernels not built ({exc}); using numpy fallback")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "fusionring._kernels._ckern",
                ["src/fusionring/_kernels/_ckern.pyx"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )
except ImportError:  # pragma: no cover - cython is a build-time nicety
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
