#!/usr/bin/env python

import os
import shutil
import stat

from setuptools import find_packages
from setuptools import setup
from setuptools.command.build_py import build_py
from setuptools.command.egg_info import egg_info

from gradelogic.version import __version__

version = __version__
package_name = 'gradelogic'
cur_dir = os.path.dirname(os.path.realpath(__file__))
pkg_dir = os.path.join(cur_dir, 'build')


def clean():
    # pylint: disable=unused-argument
    def readonly_handler(func, path, execinfo):
        os.chmod(path, stat.S_IWRITE)
        func(path)

    for stale in ('build', f'{package_name}.egg-info'):
        if os.path.exists(os.path.join(cur_dir, stale)):
            shutil.rmtree(os.path.join(cur_dir, stale), onerror=readonly_handler)


clean()


def update_permissions(path):
    """
    Make a built tree read-only.

    Args:
        path (str): Target directory path.
    """
    for dirpath, dirnames, filenames in os.walk(path):
        for dirname in dirnames:
            os.chmod(os.path.join(dirpath, dirname),
                     stat.S_IREAD | stat.S_IWRITE | stat.S_IEXEC | stat.S_IRGRP | stat.S_IXGRP)
        for filename in filenames:
            os.chmod(os.path.join(dirpath, filename), stat.S_IREAD)


class EggInfo(egg_info):
    """Egg info."""

    def run(self):
        super().run()
        update_permissions(os.path.join(cur_dir, f'{package_name}.egg-info'))


class BuildPy(build_py):
    """BuildPy."""

    def run(self):
        super().run()
        update_permissions(os.path.join(pkg_dir, 'lib', package_name))


setup(
    name=package_name,
    version=version,
    description="Model checker, proof checker and inference engine for lattice-graded multimodal logic.",
    license='Apache 2.0',
    include_package_data=True,
    packages=find_packages(include=["gradelogic", "gradelogic.*"]),
    package_data={'gradelogic': ['configs/*.yaml']},
    python_requires='>=3.8',
    cmdclass={
        'egg_info': EggInfo,
        'build_py': BuildPy,
    },
    entry_points={
        'console_scripts': ['gradelogic=gradelogic.cli:main'],
    },
    install_requires=[
        'numpy>=1.21',
        'pyyaml>=5.3',
        'easydict',
        'lark>=1.1',
        'networkx>=2.6',
        'z3-solver>=4.8',
    ]
)
