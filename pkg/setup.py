from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension("seppaths._search_cy", ["src/seppaths/_search_cy.pyx"]),
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
)
