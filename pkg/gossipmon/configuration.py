#!/usr/bin/env python
# -*- coding: utf-8 -*-


# (c) 2024 The gossipmon developers
#
# This file is a part of the Gossip Monoid Toolkit (gossipmon) project.
# USE, MODIFICATION, COPYING AND DISTRIBUTION OF THIS SOFTWARE IS SUBJECT TO
# THE TERMS AND CONDITIONS OF THE MIT LICENSE.  YOU SHOULD HAVE RECEIVED A COPY
# OF THE MIT LICENSE ALONG WITH THIS SOFTWARE; IF NOT, YOU CAN DOWNLOAD A COPY
# FROM HTTP://WWW.OPENSOURCE.ORG/.

"""
Provides the configuration of the toolkit.

A configuration file is a Python file that assigns the keys below as module
level names (``gossipmon -i DIRECTORY`` writes a commented template).  Values
given on the command line override the values of the file, which override the
defaults.

=====================  ============  ============================================
Key                    Default       Meaning
=====================  ============  ============================================
``logger_level``       ``'warning'`` one of ``'critical'``, ``'error'``,
                                     ``'warning'``, ``'info'``, ``'debug'``
``budget``             ``10**7``     states a search may expand
``all_calls_cap``      ``6``         largest enumerable dimension, all calls
``adjacent_calls_cap`` ``8``         largest enumerable dimension, adjacent
                                     calls
``workers``            ``1``         worker processes of an enumeration
``seed``               ``None``      seed of the random generator
=====================  ============  ============================================
"""


import runpy

from gossipmon.errors import BudgetError
from gossipmon.generators import GeneratorMode
from gossipmon.search import DEFAULT_BUDGET
from gossipmon.utility import logger
from gossipmon.utility.validation import check_argument_type


__docformat__ = 'reStructuredText'


class Configuration(object):
    """
    This class holds the tunables shared by the command line interface and the
    library.

    *Example*:

    .. testsetup::

        from gossipmon.configuration import Configuration

    .. doctest::

        >>> configuration = Configuration(budget=1000)
        >>> configuration.budget, configuration.workers
        (1000, 1)
    """

    #: Names of the logging levels.
    __LEVELS = ('critical', 'error', 'warning', 'info', 'debug')

    #: Default values and types of the keys.
    __DEFAULTS = {
        'logger_level': ('warning', str),
        'budget': (DEFAULT_BUDGET, int),
        'all_calls_cap': (6, int),
        'adjacent_calls_cap': (8, int),
        'workers': (1, int),
        'seed': (None, int),
    }

    def __init__(self, **values):
        """
        *Parameters*:
            - **values**: values of configuration keys;  unknown keys are
              ignored and `None` values keep the defaults.

        *Raises*:
            - **TypeError**: raised when a value has an inappropriate type;
            - **BudgetError**: raised when a budget, cap or number of workers
              is not positive;
            - **ValueError**: raised when the logging level is unknown.
        """
        self.__values = dict((key, default) for key, (default, _)
                             in Configuration.__DEFAULTS.items())
        self.update(**values)

    def update(self, **values):
        """
        Overrides configuration keys with the given values (see
        :meth:`__init__`) and returns the object itself.
        """
        for key, value in values.items():
            if key not in Configuration.__DEFAULTS or value is None:
                continue
            check_argument_type(Configuration.__name__, key,
                                Configuration.__DEFAULTS[key][1], value)
            if key == 'logger_level':
                if value.lower() not in Configuration.__LEVELS:
                    raise ValueError('Parameter "logger_level": one of %s'
                                     ' expected but "%s" given!'
                                     % (', '.join(Configuration.__LEVELS),
                                        value))
                value = value.lower()
            elif key != 'seed' and value < 1:
                raise BudgetError('Parameter "%s": a positive value expected'
                                  ' but %d given!' % (key, value))
            self.__values[key] = value
        return self

    @classmethod
    def from_file(cls, path, **overrides):
        """
        Executes the configuration file at *path* and returns its
        configuration, with *overrides* applied on top.
        """
        namespace = runpy.run_path(path)
        values = dict((key, value) for key, value in namespace.items()
                      if key in Configuration.__DEFAULTS)
        logger.get_logger('configuration').debug(
            'configuration file %s read (%d keys)', path, len(values))
        configuration = cls(**values)
        return configuration.update(**overrides)

    def cap(self, mode):
        """
        Returns the enumeration cap of a
        :class:`gossipmon.generators.GeneratorMode`.
        """
        if GeneratorMode.parse(mode) is GeneratorMode.ALL_CALLS:
            return self.all_calls_cap
        return self.adjacent_calls_cap

    def __getattr__(self, name):
        values = self.__dict__.get('_Configuration__values', {})
        if name in values:
            return values[name]
        raise AttributeError(name)

    def as_dict(self):
        """
        Returns a copy of all configuration values.
        """
        return dict(self.__values)
