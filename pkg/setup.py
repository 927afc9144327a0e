#!/usr/bin/env python
"""
Setup file for Randomtrap
"""

from setuptools import setup


# Settings
description = 'Solving the game Trap on random boards via maximum matchings'
license = 'GNU GPLv3'

package_dir = {'randomtrap': 'randomtrap'}

packages = ['randomtrap',
            'randomtrap.lattice',
            'randomtrap.percolation',
            'randomtrap.matching',
            'randomtrap.game',
            'randomtrap.constructions',
            'randomtrap.bootstrap',
            'randomtrap.experiments',
            'randomtrap.io',
            'randomtrap.control',
            'randomtrap.misc',
            'randomtrap.misc.statistics']

install_requires = ["numpy>=1.17,<3",
                    "pygame>=2,<3"]

extras_require = {
    'tests': ["pytest>=6",
              "hypothesis>=5",
              "networkx>=2.5"],
    }

entry_points = {
        'console_scripts': ['randomtrap=randomtrap.cli:main'],
    }


def get_version_info_from_file(filename):
    """Get the version number from a .py file."""

    version_nr = ''
    with open(filename) as f:
        for line in f:
            if line.startswith("__version__"):
                version_nr = line.split("'")[1]
    return version_nr


def run(version_nr):
    """Run the setup."""

    setup(name='randomtrap',
          version=version_nr,
          description=description,
          license=license,
          packages=packages,
          package_dir=package_dir,
          python_requires='>=3.6',
          install_requires=install_requires,
          extras_require=extras_require,
          entry_points=entry_points)


if __name__ == "__main__":
    run(get_version_info_from_file("randomtrap/_internals.py"))
