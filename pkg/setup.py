"""Setup Script

Building
python setup.py sdist bdist_wheel

Testing
pip install .[test]
pytest

"""

from setuptools import setup, find_packages
import pathlib

here = pathlib.Path(__file__).parent.resolve()
long_description = (here / "README.md").read_text(encoding="utf-8")

setup(
    name="liescheme",
    version="0.1.0",
    description="Lie symmetry invariant difference schemes for third order ODEs",
    long_description=long_description,
    long_description_content_type="text/markdown",
    author="Nikocraft",
    author_email="nikocraft@gmx.net",
    classifiers=[
        "Development Status :: 2 - Pre-Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",

        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",

        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords="python, lie groups, difference schemes, ode, numerical analysis",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    python_requires=">=3.10, <4",
    install_requires=["numpy", "mpmath"],
    extras_require={
        "test": ["pytest"],
    },
    entry_points={
        "console_scripts": ["liescheme=liescheme.cli.app:main"],
    },
)
