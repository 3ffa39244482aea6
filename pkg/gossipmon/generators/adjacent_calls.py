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
Provides the generating set of the double Catalan monoid :math:`DC_n`: the
call matrices :math:`C[i,i+1]` of a linear network.
"""


from gossipmon.generators import GeneratorMode
from gossipmon.generators._generators import Generators
from gossipmon.semiring import CallPair


__docformat__ = 'reStructuredText'


class AdjacentCalls(Generators):
    """
    This class implements the generating set in which node :math:`i` may only
    call its neighbours :math:`i-1` and :math:`i+1`.

    *Example*:

    .. testsetup::

        from gossipmon.generators.adjacent_calls import AdjacentCalls

    .. doctest::

        >>> [str(pair) for pair in AdjacentCalls().pairs(4)]
        ['1 2', '2 3', '3 4']
    """

    #: Default enumeration cap.
    __DEFAULT_CAP = 8

    def __init__(self, cap=None):
        """
        *Parameters*:
            - **cap** (`int`): the largest dimension that may be enumerated.
        """
        if cap is None:
            cap = AdjacentCalls.__DEFAULT_CAP
        super(AdjacentCalls, self).__init__(GeneratorMode.ADJACENT_CALLS, cap)

    def pairs(self, n):
        return tuple(CallPair(i, i + 1) for i in range(1, n))
