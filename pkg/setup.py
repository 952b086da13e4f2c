from setuptools import setup, find_packages

setup(
    name="locally-sparse-triples",
    version="0.1.0",
    author="Kapil Poreddy",
    author_email="poreddykapil@ieee.org",
    description="Locally sparse 3-uniform hypergraphs: packing lift, configuration checker, exact oracle and rational LP bounds",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    python_requires=">=3.10",
    install_requires=[
        line.strip()
        for line in open("requirements.txt").readlines()
        if line.strip() and not line.startswith("#")
    ],
    entry_points={
        "console_scripts": [
            "lsts=lsts.cli.main:main",
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
