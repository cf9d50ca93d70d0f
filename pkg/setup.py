#!/usr/bin/env python3
from pathlib import Path

from setuptools import find_packages
from setuptools import setup
# read the contents of README.md file fo use in pypi description
directory = Path(__file__).parent
long_description = (directory / 'README.md').read_text()

setup(
    name='looptree',
    version='0.1.0',
    packages=find_packages(exclude=['examples', 'test', 'test.*', 'sys_test', 'sys_test.*']),

    description='Random loop models on trees: simulations and analytic bounds',

    long_description=long_description,
    long_description_content_type='text/markdown',

    author='The looptree authors',
    license='GPLv3',

    classifiers=[
        'Development Status :: 3 - Alpha',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Scientific/Engineering :: Physics',
        'Programming Language :: Python :: 3'
    ],

    keywords='random loops trees galton-watson monte-carlo',

    python_requires='>=3.9',

    install_requires=[
        'scipy~=1.7',
        'numpy>=1.20',
        'PyYAML>=5.4',
    ],

    # $ pip install -e .[dev]
    extras_require={
        'dev': [
            'pre-commit',
            'coverage',
        ],
    },

    entry_points={
        'console_scripts': [
            'looptree=looptree.cli.main:main',
        ],
    },
)
