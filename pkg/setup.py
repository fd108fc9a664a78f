import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("MCS_SKIP_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("mcsearch._cliquec",
                       sources=["src/mcsearch/_cliquec.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except Exception as exc:  # no Cython / no compiler: install pure-Python only
        print(f"warning: compiled clique kernel skipped ({exc}); "
              f"the pure-Python fallback will be used at import time")

setup(ext_modules=ext_modules)
