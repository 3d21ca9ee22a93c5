import sys
from setuptools import setup

# The compiled feasibility kernel is optional: the package falls back to the
# pure-Python kernel at import time when the extension is missing.
ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/hyparr/_fmcore.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-env dependent
    sys.stderr.write("hyparr: building without compiled kernel (%s)\n" % exc)

setup(ext_modules=ext_modules)
