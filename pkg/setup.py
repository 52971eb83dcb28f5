"""
Setup script for molr package.
"""

from setuptools import setup, find_packages
from pathlib import Path

# Read README
readme_file = Path(__file__).parent / "docs" / "README.md"
long_description = readme_file.read_text() if readme_file.exists() else ""

setup(
    name="molr",
    version="1.0.0",
    description="Enumeration of mutually orthogonal Latin rectangles up to isotopism",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*"]),
    keywords=[
        "latin squares",
        "latin rectangles",
        "mols",
        "combinatorics",
        "isotopism",
        "autotopism",
        "finite geometry",
    ],
    install_requires=[
        "rich>=13.7.0",
        "pyyaml>=6.0.1",
        "click>=8.1.7",
        "networkx>=3.1",
    ],
    python_requires=">=3.10",
    entry_points={
        "console_scripts": [
            "molr=molr.cli:cli",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Programming Language :: Python :: 3.13",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
