"""Build the optional compiled kernels.

Without Cython or a C compiler the package still installs; the pure-Python
kernels are used instead.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension
except ImportError:
    pass
else:
    ext_modules = cythonize(
        [Extension("nutgraphs._ckernels", ["src/nutgraphs/_ckernels.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
