from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # no Cython at build time: install pure-Python only, the package
    # falls back to dedekind._kernels_py at import
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "dedekind._ckernels",
                ["src/dedekind/_ckernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
