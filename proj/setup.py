# SPDX-License-Identifier: Apache-2.0
"""Builds the compiled extension directly with pybind11's setuptools helpers.

The CMake build embeds the preset group files into the library through a
generated include; this script reproduces that step so both build paths
compile identical sources.
"""

import glob
import os

from pybind11.setup_helpers import ParallelCompile, Pybind11Extension, build_ext
from setuptools import setup

HERE = os.path.abspath(os.path.dirname(__file__))


def generate_preset_inc() -> str:
    # setup() requires /-separated paths relative to this directory
    out_dir = "build/_setup_generated"
    os.makedirs(os.path.join(HERE, out_dir), exist_ok=True)
    lines = []
    for path in sorted(glob.glob(os.path.join(HERE, "presets", "*.toml"))):
        name = os.path.splitext(os.path.basename(path))[0]
        with open(path, "r", encoding="utf-8") as f:
            body = f.read()
        lines.append('{"%s", R"PRESET(%s)PRESET"},\n' % (name, body))
    content = "".join(lines)
    inc = os.path.join(HERE, out_dir, "preset_data.inc")
    if not os.path.exists(inc) or open(inc, "r", encoding="utf-8").read() != content:
        with open(inc, "w", encoding="utf-8") as f:
            f.write(content)
    return out_dir


ParallelCompile("MCKAY_BUILD_JOBS").install()

ext = Pybind11Extension(
    "mckay._mckay",
    sources=sorted(
        os.path.relpath(p, HERE).replace(os.sep, "/")
        for p in glob.glob(os.path.join(HERE, "src", "*.cpp"))
    )
    + ["bindings/module.cpp"],
    include_dirs=["include", generate_preset_inc()],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
