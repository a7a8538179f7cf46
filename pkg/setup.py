# Copyright (c) 2018-present Invforge Developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from setuptools import find_packages, setup

from invforge import (__author__, __description__, __email__, __license__,
                      __title__, __url__, __version__)

install_requires = [
    "click>=7.1,<9",
    "colorama>=0.4.6",
    "lockfile>=0.9.1,<0.13",
    "semantic_version>=2.5.0,<3",
    "sympy>=1.7",
    "numpy>=1.17",
    "pydantic>=2,<3"
]

setup(
    name=__title__,
    version=__version__,
    description=__description__,
    long_description=open("README.rst").read(),
    author=__author__,
    author_email=__email__,
    url=__url__,
    license=__license__,
    python_requires='>=3.8',
    install_requires=install_requires,
    packages=find_packages(exclude=["tests", "tests.*"]),
    entry_points={
        "console_scripts": [
            "invforge = invforge.__main__:main"
        ]
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics"
    ],
    keywords=[
        "differential-invariants", "moving-frame", "equivalence-group",
        "diffusion-equations", "symbolic-computation", "sympy"
    ])
