from setuptools import setup

try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools import Extension
except ImportError:  # build without the compiled kernels; pure-Python fallback is used
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "rainbowmult._ckernels",
                ["src/rainbowmult/_ckernels.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
