# -*- coding: utf-8 -*-

# Copyright (c) 2026 cdsvar developers

import io
import os

from setuptools import find_packages, setup

NAME = "cdsvar"
AUTHOR = "cdsvar developers"
DESCRIPTION = (
    "Share, bond and CDS market interdependence with difference VARs, "
    "Granger causality and impulse responses"
)
REQUIRES_PYTHON = ">=3.8"
HERE = os.path.abspath(os.path.dirname(__file__))
REQUIREMENTS = [
    "numpy>=1.20",
    "scipy>=1.7",
    "pandas>=1.5",
    "statsmodels>=0.13",
    "matplotlib>=3.5",
]
EXTRAS = {"dev": ["pytest>=7", "flake8", "black"]}
CLASSIFIERS = [
    "Programming Language :: Python :: 3",
    "Programming Language :: Python :: 3.8",
    "Topic :: Office/Business :: Financial",
    "Topic :: Scientific/Engineering :: Mathematics",
]

# README doubles as the long description
try:
    with io.open(os.path.join(HERE, "README.md"), encoding="utf-8") as handle:
        long_description = "\n" + handle.read()
except FileNotFoundError:
    long_description = DESCRIPTION

about = {}
with open(os.path.join(HERE, NAME, "__version__.py")) as handle:
    exec(handle.read(), about)

setup(
    name=NAME,
    version=about["__version__"],
    author=AUTHOR,
    description=DESCRIPTION,
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*"]),
    package_data={NAME: ["data/*.csv", "data/*.json"]},
    install_requires=REQUIREMENTS,
    extras_require=EXTRAS,
    python_requires=REQUIRES_PYTHON,
    include_package_data=True,
    classifiers=CLASSIFIERS,
    entry_points={
        "console_scripts": ["cdsvar=cdsvar.cli:main"],
    },
)
