"""Packaging logic for the freebycyclic library."""
import io
import os
import re

import setuptools

here = os.path.dirname(__file__)

with io.open(os.path.join(here, 'src', 'freebycyclic', '__init__.py'),
             encoding='utf-8') as f:
    version = re.search(r"^__version__ = '([^']+)'", f.read(),
                        re.MULTILINE).group(1)

packages = [
    'freebycyclic',
]

with io.open('README.rst', encoding='utf-8') as f:
    readme = f.read()

setuptools.setup(
    name='freebycyclic',
    version=version,
    description='Growth, thickness certificates and divergence of '
                'free-by-cyclic groups',
    long_description=readme,
    author='The freebycyclic developers',
    packages=packages,
    package_dir={'': 'src/'},
    package_data={'freebycyclic': ['fixtures/*.fbc']},
    include_package_data=True,
    python_requires='>=3.8',
    install_requires=[
        'numpy>=1.13',
        'scipy>=1.0',
        'networkx>=2.0',
    ],
    entry_points={
        'console_scripts': [
            'freebycyclic = freebycyclic.cli:main',
        ],
    },
    license='Apache 2.0',
    classifiers=(
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering :: Mathematics',
    ),
)
