"""Build script.

The package is pure Python.  If Cython is available the row-reduction /
matrix-product inner loops in ``orehom/_kernels.pyx`` are compiled into an
extension module; otherwise the pure-Python twin ``orehom/_kernels_py.py``
is used at runtime.  The build must therefore never fail just because the
extension cannot be built.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/orehom/_kernels.pyx",
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - depends on build env
    print(f"orehom: skipping compiled kernels ({exc!r}); pure-Python fallback will be used")

setup(ext_modules=ext_modules)
