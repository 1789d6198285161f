# setup.py
# Setup installation for the application

from pathlib import Path

from setuptools import find_packages, setup


BASE_DIR = Path(__file__).parent


# Load packages from requirements.txt
with open(Path(BASE_DIR, "requirements.txt")) as file:
    required_packages = [ln.strip() for ln in file.readlines() if ln.strip()]


dev_packages = [
    "black==23.7.0",
    "flake8==6.1.0",
    "isort==5.12.0",
    "mypy==1.5.1",
    "pre-commit==3.3.3",
    "pytest==7.4.0",
]


setup(
    name="knot-thickness",
    version="0.1",
    license="MIT",
    description="Kauffman states, delta-gradings and dealternating bounds for knot diagrams.",
    keywords=[
        "knot-theory",
        "knot-floer-homology",
        "kauffman-states",
        "alexander-polynomial",
        "low-dimensional-topology",
    ],
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
    ],
    python_requires=">=3.8",
    packages=find_packages(exclude=["tests", "scripts"]),
    package_data={"knot_thickness": ["conf/*.yaml", "data/*.csv"]},
    install_requires=required_packages,
    extras_require={
        "dev": dev_packages,
        # Rolfsen table for scripts/prepare_census.py and `verify rolfsen`
        "census": ["snappy==3.1.1"],
    },
    entry_points={
        "console_scripts": ["knot-thickness = knot_thickness.cli:main"],
    },
)
