import numpy
from Cython.Build import cythonize
from setuptools import Extension, setup

setup(
    ext_modules=cythonize(
        [Extension("skeletal._kernel", ["src/skeletal/_kernel.pyx"], include_dirs=[numpy.get_include()])],
        language_level=3,
    ),
)
