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
Contains the index bookkeeping of the block matrix built by the reduction of
the restricted transformation problem to the membership problem.

For a source dimension :math:`n` the matrix has dimension :math:`n(n+4)`.
Its columns split into the blocks *a* (width :math:`n^2`) and *b*, *c*, *d*,
*e* (width :math:`n` each);  its rows split into five blocks of heights
:math:`n, n^2, n, n, n`.  Node :math:`i` of block *x* has the global index
``layout.x(i)``.
"""


from gossipmon.errors import OutOfRangeError
from gossipmon.utility.validation import check_argument_type


__docformat__ = 'reStructuredText'


class BlockLayout(object):
    """
    The block layout of a reduced membership instance.

    *Example*:

    .. testsetup::

        from gossipmon.reductions._layout import BlockLayout

    .. doctest::

        >>> layout = BlockLayout(2)
        >>> layout.size, layout.b(1), layout.e(2)
        (12, 5, 12)
        >>> layout.block_of(7)
        ('c', 1)
    """

    #: Names of the column blocks, in order.
    __NAMES = ('a', 'b', 'c', 'd', 'e')

    def __init__(self, n):
        """
        *Parameters*:
            - **n** (`int`): the source dimension, at least one.
        """
        check_argument_type(BlockLayout.__name__, 'n', int, n)
        if n < 1:
            raise OutOfRangeError('Parameter "n": a source dimension cannot'
                                  ' be less than one but %d given!' % n)
        self.__n = n

    @property
    def n(self):
        """
        (*Property*)  The source dimension.
        """
        return self.__n

    @property
    def size(self):
        """
        (*Property*)  The dimension :math:`n(n+4)` of the block matrix.
        """
        return self.__n * (self.__n + 4)

    @property
    def heights(self):
        """
        (*Property*)  The heights of the five row blocks.
        """
        n = self.__n
        return [n, n * n, n, n, n]

    @property
    def widths(self):
        """
        (*Property*)  The widths of the column blocks *a* to *e*.
        """
        n = self.__n
        return [n * n, n, n, n, n]

    def __offset(self, name):
        n = self.__n
        return n * n + n * (BlockLayout.__NAMES.index(name) - 1)

    def __index(self, name, i):
        limit = self.__n * self.__n if name == 'a' else self.__n
        if not 1 <= i <= limit:
            raise OutOfRangeError('Block "%s" has no node %d!' % (name, i))
        return (0 if name == 'a' else self.__offset(name)) + i

    def a(self, i):
        return self.__index('a', i)

    def b(self, i):
        return self.__index('b', i)

    def c(self, i):
        return self.__index('c', i)

    def d(self, i):
        return self.__index('d', i)

    def e(self, i):
        return self.__index('e', i)

    def indices(self, name):
        """
        Returns the global indices of the column block *name*, in order.
        """
        limit = self.__n * self.__n if name == 'a' else self.__n
        return [self.__index(name, i) for i in range(1, limit + 1)]

    def block_of(self, index):
        """
        Returns the pair ``(name, i)`` of the block and the local node of a
        global 1-based *index*.
        """
        if not 1 <= index <= self.size:
            raise OutOfRangeError('Index %d is out of range for dimension'
                                  ' %d!' % (index, self.size))
        n = self.__n
        if index <= n * n:
            return ('a', index)
        position = index - n * n - 1
        return (BlockLayout.__NAMES[1 + position // n], position % n + 1)
