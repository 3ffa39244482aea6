import os
from setuptools import setup

setup(
    name='gossipmon',
    version='1.0.0',
    author='The gossipmon developers',
    description='Gossip Monoid Toolkit (gossipmon) provides exact solvers, '\
                'monoid enumeration and NP-hardness reductions for the '\
                'gossip monoid over the boolean semiring.',
    long_description=open("README.rst").read(),
    license='MIT License',
    python_requires='>=3.8',
    install_requires=['networkx>=2.5'],
    extras_require={'tests': ['pytest>=6.0']},
    packages=[
        'gossipmon',
        'gossipmon.cli',
        'gossipmon.generators',
        'gossipmon.reductions',
        'gossipmon.solvers',
        'gossipmon.utility'
    ],
    package_data={'gossipmon.cli': ['_configuration_template.py']},
    entry_points = {'console_scripts': ['gossipmon=gossipmon.cli.cli:main'],}
)
