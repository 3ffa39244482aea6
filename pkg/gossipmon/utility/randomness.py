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
Provides a seedable pseudo-random number generator.

Random knowledge states and random call sequences both draw from the
generator returned by :func:`get_random_generator`, so a single seed makes a
whole run reproducible.
"""


import random


__docformat__ = 'reStructuredText'

#: A random generator object of the :class:`_Randomness` class -- to create the
#: object a call to the :func:`get_random_generator` function is necessary.
__RANDOM_GENERATOR = None


class _Randomness(object):
    """
    This class provides a pseudo-random number generator with the use of the
    :mod:`random` module from the standard library.
    """

    def __init__(self, seed=None):
        """
        *Parameters*:
            - **seed** (`int`): an initial seed of the generator;  if `None`,
              the generator is seeded from the system.
        """
        self.__random = random.Random(seed)

    def seed(self, value):
        """
        Re-seeds the generator.

        *Parameters*:
            - **value** (`int`): the new seed.

        *Raises*:
            - **ValueError**: raised when the given value of the *value*
              parameter is `None`.
        """
        if value is None:
            raise ValueError('Parameter "value": a seed expected but "None"'
                             ' value given!')
        self.__random.seed(value)

    def bits(self, count, probability=0.5):
        """
        Returns an integer whose lowest *count* bits are set independently,
        each with the given *probability*.
        """
        value = 0
        for position in range(count):
            if self.__random.random() < probability:
                value |= 1 << position
        return value

    def choice(self, sequence):
        """
        Returns a random element of the non-empty **sequence**.
        """
        return self.__random.choice(sequence)


def get_random_generator(seed=None):
    """
    Returns an object representing the :class:`_Randomness` pseudo-random
    number generator.  Multiple calls to this function will return the same
    object;  passing a *seed* re-seeds that object.

    *Example*:

    .. testsetup::

        from gossipmon.utility.randomness import get_random_generator

    .. doctest::

        >>> first = get_random_generator(7).bits(16)
        >>> get_random_generator(7).bits(16) == first
        True
    """
    global __RANDOM_GENERATOR
    if __RANDOM_GENERATOR is None:
        __RANDOM_GENERATOR = _Randomness(seed)
    elif seed is not None:
        __RANDOM_GENERATOR.seed(seed)
    return __RANDOM_GENERATOR
