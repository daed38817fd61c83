#!/usr/bin/env python
# -*- coding: utf-8 -*-

import os
from runpy import run_path

from setuptools import find_packages, setup

# This appears to be the least annoying Python-version-agnostic way of loading
# an external file.
extras_require = run_path(
    os.path.join(os.path.dirname(__file__), "toricmorse", "deps/extras.py")
)["extras_require"]

with open("README.md") as readme_file:
    readme = readme_file.read()

requirements = [
    "attrs>=20.1",
    "cattrs",
    "PyYAML",
    "networkx>=2.4",
    "numpy",
    "pyrsistent",
    "sympy",
]

setup(
    name="toricmorse",
    version="0.1.0",
    description=(
        "Minimal complexes for complements of toric and hyperplane arrangements "
        "via discrete Morse theory"
    ),
    long_description=readme,
    long_description_content_type="text/markdown",
    license="Apache License 2.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    include_package_data=True,
    install_requires=requirements,
    extras_require=extras_require,
    entry_points={
        "console_scripts": ["toricmorse=toricmorse.cli.main:entry_point"],
    },
    python_requires=">=3.9",
    zip_safe=False,
    keywords="toric arrangements salvetti complex discrete morse theory",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Natural Language :: English",
        "License :: OSI Approved :: Apache Software License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
