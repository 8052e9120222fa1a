from setuptools import setup, find_packages
import io
import os
import re

VERSION = ''
NAME = ''
AUTHOR = ''
DESCRIPTION = ''
LICENSE = ''
LONG_DESCRIPTION = ''

here = os.path.abspath(os.path.dirname(__file__))
with io.open(os.path.join(here, 'lib', 'walkwait', '__init__.py'), encoding='utf-8') as f:
    str_data = f.read()
    metadata = dict(re.findall(r"^__(\w+)__ = '([^']*)'", str_data, re.MULTILINE))

    NAME = metadata['title']
    VERSION = metadata['version']
    AUTHOR = metadata['author']
    DESCRIPTION = metadata['description']
    LICENSE = metadata['license']

with io.open(os.path.join(here, 'README.md'), encoding='utf-8') as f:
    LONG_DESCRIPTION = f.read()

setup(
    name=NAME,
    version=VERSION,
    author=AUTHOR,
    description=DESCRIPTION,
    long_description=LONG_DESCRIPTION,
    long_description_content_type='text/markdown',
    license=LICENSE,
    package_dir={"": "lib"},
    packages=find_packages(where="lib"),
    install_requires=[
        "numpy>=1.22"
    ],
    entry_points={
        "console_scripts": [
            "walkwait=walkwait.cli:main"
        ]
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: GNU General Public License v2 (GPLv2)",
        "Operating System :: OS Independent"
    ],
    python_requires=">=3.9"
)
