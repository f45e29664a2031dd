#!/usr/bin/env python
# -*- coding: utf-8 -*-

from os import path

from setuptools import find_packages, setup

from cvibias.__version__ import __version__

install_requires = [
    'numpy>=1.17,<2.0',
    'scipy>=1.3,<2.0',
    'jsonschema>=3.0,<5.0',
    'python-slugify>=1.2.4,<9.0'
]

test_requires = [
    'pytest>=6.0,<9.0',
    'pytest-cov>=2.10,<5.0',
    'mock>=3.0,<6.0',
    'tox>=3.0,<5.0',
    'faker>=4.0',
    'hypothesis>=5.0,<7.0',
    'Sphinx>=3.0,<8.0',
    'sphinx-rtd-theme>=0.5.0,<2.0'
]

this_dir = path.abspath(path.dirname(__file__))

with open(path.join(this_dir, 'README.md')) as fh:
    long_description = fh.read()

setup(
    name='cvibias',
    version=__version__,
    description='Number-of-clusters and ground truth bias of pair-counting external cluster validity indices',
    long_description=long_description,
    long_description_content_type='text/markdown',
    keywords='clustering validity rand-index entropy monte-carlo',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering :: Information Analysis'
    ],
    packages=find_packages(exclude=['tests', 'tests.*', 'examples', 'examples.*']),
    include_package_data=True,
    python_requires='>=3.8',
    install_requires=install_requires,
    extras_require={
        'tests': test_requires
    },
    entry_points={
        'console_scripts': [
            'cvibias=cvibias.cli.main:main'
        ]
    }
)
