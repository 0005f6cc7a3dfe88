from setuptools import setup, find_packages

setup(
    name='almostflat',
    version='0.1.0',
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    long_description=open('README.md', "r", encoding="utf-8").read(),
    long_description_content_type="text/markdown",
    license="Apache License 2.0",
    author='Maxence Larose',
    author_email="maxence.larose.1@ulaval.ca",
    description="Almost flat vector bundles over simplicial complexes: sampled transition functions, transport, "
                "global trivializations, almost representations and Chern numbers.",
    python_requires=">=3.8",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
    ],
    install_requires=[
        "attrs>=21.4.0",
        "jsonschema>=3.2.0",
        "networkx>=2.6",
        "numpy>=1.22.1",
        "scipy>=1.7",
    ],
    extras_require={"test": ["pytest>=7.0"]},
    entry_points={"console_scripts": ["almostflat=almostflat.cli:main"]},
)
