import os
import subprocess
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        extdir = os.path.abspath(os.path.dirname(self.get_ext_fullpath(ext.name)))
        build_dir = os.path.abspath(self.build_temp)
        os.makedirs(build_dir, exist_ok=True)
        cfg = "Debug" if self.debug else "Release"
        source_dir = os.path.abspath(os.path.dirname(__file__))
        subprocess.run(
            [
                "cmake",
                "-S", source_dir,
                "-B", build_dir,
                f"-DCMAKE_BUILD_TYPE={cfg}",
                f"-DPython_EXECUTABLE={sys.executable}",
                f"-DBCX_PY_OUTPUT_DIR={extdir}",
                "-DBCX_BUILD_CLI=OFF",
                "-DBCX_BUILD_TESTING=OFF",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", build_dir, "--target", "_core", "--parallel"],
            check=True,
        )


setup(
    packages=["bcx"],
    package_dir={"bcx": "python/bcx"},
    ext_modules=[CMakeExtension("bcx._core")],
    cmdclass={"build_ext": CMakeBuild},
)
