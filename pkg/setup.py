"""Build script: compiles the optional bitset-scan extension when Cython and a
C compiler are available; otherwise installs pure Python (the package falls
back to ordshadow._pykernels at import time)."""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


def extension_modules():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension

    ext = Extension(
        "ordshadow._ckernels",
        ["src/ordshadow/_ckernels.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize(
        [ext],
        language_level=3,
        compiler_directives={"boundscheck": False, "wraparound": False, "cdivision": True},
    )


class optional_build_ext(build_ext):
    """Degrade to a pure-Python install instead of failing the build."""

    def run(self):
        try:
            build_ext.run(self)
        except Exception as exc:  # missing compiler, broken toolchain, ...
            print(f"ordshadow: compiled kernels skipped ({exc}); "
                  "using the pure Python fallback", file=sys.stderr)

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except Exception as exc:
            print(f"ordshadow: building {ext.name} failed ({exc}); "
                  "using the pure Python fallback", file=sys.stderr)


setup(ext_modules=extension_modules(), cmdclass={"build_ext": optional_build_ext})
