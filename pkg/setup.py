from setuptools import setup, find_packages

with open("README.md", "r") as readme:
    long_description = readme.read()


setup(
    name='tsi_entanglement',
    version="0.1.0",
    license='Apache License 2.0',
    description='Entanglement dynamics, sudden death and non-Markovianity '
                'of a Bell pair in the extended cluster XX chain with '
                'three-spin interaction',
    long_description = long_description,
    long_description_content_type = "text/markdown",
    packages=find_packages(exclude=["tests"]),
    package_data={
        "tsi_entanglement.qc": ["verify.yml"]
    },
    python_requires=">=3.8",
    install_requires=[
        'numpy>=1.19',
        'scipy>=1.6',
        'pandas>=1.1',
        'PyYAML'
    ],
    extras_require={
        "test": ["pytest"],
        "docs": ["Sphinx"]
    },
    entry_points={
        "console_scripts": [
            "tsi-entanglement = tsi_entanglement.utils.cli:main"
        ]
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: Apache Software License",
        "Topic :: Scientific/Engineering :: Physics",
        "Operating System :: OS Independent"]
)
