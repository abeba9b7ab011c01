# -*- coding: utf-8 -*-
from os.path import join, dirname
from setuptools import setup, find_packages

VERSION = (0, 1, 0)
__version__ = VERSION
__versionstr__ = '.'.join(map(str, VERSION))

f = open(join(dirname(__file__), 'README'))
long_description = f.read().strip()
f.close()

install_requires = [
    'async_timeout>=3.0',
    'networkx>=2.5',
    'numpy>=1.19',
]

tests_require = [
    'pytest',
    'pytest-asyncio',
    'pytest-cov',
    'hypothesis',
]

setup(
    name='fourcycle-colourings',
    description="Equitable block colourings of 4-cycle systems",
    license="Apache License, Version 2.0",
    long_description=long_description,
    version=__versionstr__,
    packages=find_packages(
        where='.',
        exclude=('test_fourcycle*', )
    ),
    classifiers=[
        "Development Status :: 4 - Beta",
        "License :: OSI Approved :: Apache Software License",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: Implementation :: CPython",
    ],
    install_requires=install_requires,
    python_requires=">=3.8",
    entry_points={
        'console_scripts': ['fourcycle = fourcycle.cli:main'],
    },

    test_suite="test_fourcycle.run_tests.run_all",
    tests_require=tests_require,

    extras_require={'develop': tests_require},
)
