"""Build script: compiles the optional fast kernel extension.

The package is fully functional without the extension (a pure-Python
implementation with the same interface is selected at import time), so a
failed compile downgrades to a warning instead of aborting the install.
"""

import warnings

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [Extension("posetdecomp._fast", ["src/posetdecomp/_fast.pyx"])],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - toolchain-dependent
    warnings.warn(f"fast kernels not built ({exc}); pure-Python fallback will be used")
    extensions = []

setup(ext_modules=extensions)
