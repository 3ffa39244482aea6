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
This package provides a collection of generating sets of gossip monoids.

A generating set decides which telephone calls are allowed in an
:math:`n`-node network.  With :class:`AllCalls
<gossipmon.generators.all_calls.AllCalls>` any two nodes may call each other
and the call matrices generate the *gossip monoid* :math:`G_n`;  with
:class:`AdjacentCalls <gossipmon.generators.adjacent_calls.AdjacentCalls>`
only neighbours on a line may call each other and the generated submonoid is
the *double Catalan monoid* :math:`DC_n`.

Calls are always listed in lexicographic order of their node pairs, so every
breadth-first search over them finds the same witnesses on every run.
"""


from enum import Enum


__docformat__ = 'reStructuredText'

__all__ = ['adjacent_calls', 'all_calls', 'GeneratorMode', 'get_generators']


class GeneratorMode(Enum):
    """
    Names the generating set of a monoid.
    """

    ALL_CALLS = 'AllCalls'
    ADJACENT_CALLS = 'AdjacentCalls'

    @classmethod
    def parse(cls, value):
        """
        Returns the mode named by *value*: a :class:`GeneratorMode` object, its
        value (``'AllCalls'``, ``'AdjacentCalls'``) or a short command line
        name (``'all'``, ``'adjacent'``).

        *Raises*:
            - **ValueError**: raised when the name is unknown.
        """
        if isinstance(value, cls):
            return value
        short = {'all': cls.ALL_CALLS, 'adjacent': cls.ADJACENT_CALLS}
        key = str(value)
        if key.lower() in short:
            return short[key.lower()]
        return cls(key)

    def __str__(self):
        return self.value


def get_generators(mode, cap=None):
    """
    Returns an object implementing the generating set named by *mode*.

    *Parameters*:
        - **mode**: a generator mode accepted by :meth:`GeneratorMode.parse`;
        - **cap** (`int`): the largest dimension that may be enumerated
          exhaustively;  the default of the chosen class is used if `None`.
    """
    # imported here, both modules import the abstract class from this package
    from gossipmon.generators.adjacent_calls import AdjacentCalls
    from gossipmon.generators.all_calls import AllCalls
    mode = GeneratorMode.parse(mode)
    if mode is GeneratorMode.ALL_CALLS:
        return AllCalls(cap)
    return AdjacentCalls(cap)
