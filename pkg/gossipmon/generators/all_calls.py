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
Provides the generating set of the gossip monoid :math:`G_n`: all
:math:`n(n-1)/2` call matrices :math:`C[i,j]`.
"""


from itertools import combinations

from gossipmon.generators import GeneratorMode
from gossipmon.generators._generators import Generators
from gossipmon.semiring import CallPair


__docformat__ = 'reStructuredText'


class AllCalls(Generators):
    """
    This class implements the generating set in which any two nodes may call
    each other.

    *Example*:

    .. testsetup::

        from gossipmon.generators.all_calls import AllCalls

    .. doctest::

        >>> [str(pair) for pair in AllCalls().pairs(3)]
        ['1 2', '1 3', '2 3']
    """

    #: Default enumeration cap, :math:`|G_7|` is far beyond desk scale.
    __DEFAULT_CAP = 6

    def __init__(self, cap=None):
        """
        *Parameters*:
            - **cap** (`int`): the largest dimension that may be enumerated.
        """
        if cap is None:
            cap = AllCalls.__DEFAULT_CAP
        super(AllCalls, self).__init__(GeneratorMode.ALL_CALLS, cap)

    def pairs(self, n):
        return tuple(CallPair(i, j)
                     for i, j in combinations(range(1, n + 1), 2))
