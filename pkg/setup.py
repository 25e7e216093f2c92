from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # No Cython available: the pure-Python kernel still works, just slower.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "kelc._kernel.fast",
                ["src/kelc/_kernel/fast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
