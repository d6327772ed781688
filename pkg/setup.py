import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    extensions = cythonize(
        [Extension("approxrbf._fastcore", ["src/approxrbf/_fastcore.pyx"],
                   include_dirs=[numpy.get_include()],
                   define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")])],
        language_level="3")
except ImportError:
    # pure-python fallback is selected at import when the extension is absent
    extensions = []

setup(ext_modules=extensions)
