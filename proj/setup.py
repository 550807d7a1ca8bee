from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

core_sources = [
    "src/conditions.cpp",
    "src/taxonomy.cpp",
    "src/lattice.cpp",
    "src/flow.cpp",
    "src/features.cpp",
    "src/scenario.cpp",
    "src/report.cpp",
    "src/selfcheck.cpp",
]

setup(
    ext_modules=[
        Pybind11Extension(
            "denial_taxonomy._denial_taxonomy",
            sources=["bindings/module.cpp"] + core_sources,
            include_dirs=["include", "vendor"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
    packages=["denial_taxonomy"],
    package_dir={"denial_taxonomy": "python/denial_taxonomy"},
)
