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
Contains an abstract class that should be implemented by all generating sets
of gossip monoids.
"""


from abc import ABCMeta, abstractmethod
from functools import lru_cache

from gossipmon.errors import BudgetError, OutOfRangeError
from gossipmon.utility import logger
from gossipmon.utility.validation import check_argument_type


__docformat__ = 'reStructuredText'


class Generators(metaclass=ABCMeta):
    """
    This class is an abstract class that should be implemented by all
    generating sets.  A generating set lists the call pairs allowed in an
    :math:`n`-node network and caps the dimension up to which its monoid may
    be enumerated exhaustively.
    """

    def __init__(self, mode, cap):
        """
        *Parameters*:
            - **mode** (:class:`gossipmon.generators.GeneratorMode`): the mode
              implemented by the class;
            - **cap** (`int`): the largest dimension that may be enumerated.

        *Raises*:
            - **BudgetError**: raised when *cap* is less than one.
        """
        check_argument_type(self.__class__.__name__, 'cap', int, cap)
        if cap < 1:
            raise BudgetError('Parameter "cap": an enumeration cap cannot be'
                              ' less than one but %d given!' % cap)
        self.__mode = mode
        self.__cap = cap
        self.__logger = logger.get_logger('generators.' + str(mode))
        assert self.__logger is not None, \
               'A logger object expected but "None" value got!'

    @property
    def logger(self):
        """
        (*Property*)  A logger object of the :class:`logging.Logger` class with
        an appropriate channel name.

        .. seealso::  :mod:`gossipmon.utility.logger`
        """
        return self.__logger

    @property
    def mode(self):
        """
        (*Property*)  The :class:`gossipmon.generators.GeneratorMode` of the
        generating set.
        """
        return self.__mode

    @property
    def cap(self):
        """
        (*Property*)  The largest dimension that may be enumerated.
        """
        return self.__cap

    @abstractmethod
    def pairs(self, n):
        """
        Returns the allowed calls of an :math:`n`-node network as a tuple of
        :class:`gossipmon.semiring.CallPair` objects in lexicographic order.

        *Raises*:
            - **NotImplementedError**: this method is an abstract method.
        """
        raise NotImplementedError('The abstract class "Generators" has'
                                  ' no implementation of the "pairs()"'
                                  ' method!')

    def check_cap(self, n):
        """
        Raises an exception unless an :math:`n`-node monoid may be enumerated.

        *Raises*:
            - **OutOfRangeError**: raised when *n* is less than one;
            - **BudgetError**: raised when *n* exceeds the cap.
        """
        check_argument_type(self.__class__.__name__, 'n', int, n)
        if n < 1:
            raise OutOfRangeError('Parameter "n": a dimension cannot be less'
                                  ' than one but %d given!' % n)
        if n > self.__cap:
            self.__logger.error('enumeration of dimension %d refused (cap'
                                ' %d)', n, self.__cap)
            raise BudgetError('Parameter "n": the %s enumeration cap is %d'
                              ' but %d given;  raise the cap to enumerate'
                              ' larger monoids!' % (self.__mode, self.__cap,
                                                    n))


@lru_cache(maxsize=None)
def index_pairs(pairs):
    """
    Returns the 0-based index pairs of a tuple of call pairs, the form used by
    the code-level kernels of :mod:`gossipmon.semiring`.
    """
    return tuple((pair.i - 1, pair.j - 1) for pair in pairs)
