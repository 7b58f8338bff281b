from setuptools import setup

# The compiled kernels are optional: the package falls back to the pure
# Python implementations in redkit.kernels._pure when the extension is
# missing, so a failed build must not abort the install.
ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/redkit/kernels/_speed.pyx"], language_level=3
    )
    for ext in ext_modules:
        ext.optional = True
except ImportError:
    pass

setup(ext_modules=ext_modules)
