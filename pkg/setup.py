from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("varistar._core", sources=["src/varistar/_core.pyx"])],
        language_level="3",
    )
    include_dirs = [numpy.get_include()]
except ImportError:
    # Pure-python fallback is selected at import time; the extension is optional.
    ext_modules = []
    include_dirs = []

setup(ext_modules=ext_modules, include_dirs=include_dirs)
