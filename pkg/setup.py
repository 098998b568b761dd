from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("fareykit._ckernel", ["src/fareykit/_ckernel.pyx"])],
        language_level=3,
    )
except ImportError:
    # Pure-python kernel is used when the extension is unavailable.
    ext_modules = []

setup(ext_modules=ext_modules)
