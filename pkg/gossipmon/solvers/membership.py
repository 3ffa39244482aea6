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
Provides a solver of the membership problem: is a given :math:`A \\in B_n` an
element of the gossip monoid :math:`G_n`?
"""


from gossipmon.search import DEFAULT_BUDGET
from gossipmon.semiring import BoolMatrix
from gossipmon.solvers.transformation import solve_gtp
from gossipmon.utility.validation import check_argument_type


__docformat__ = 'reStructuredText'


def solve_gmp(a, budget=DEFAULT_BUDGET):
    """
    Decides whether :math:`A \\in G_n`, i.e. whether :math:`I_nG = A` for some
    :math:`G \\in G_n`.  A matrix with a zero on the diagonal is rejected at
    the root of the search, since every element lies above :math:`I_n`.

    *Returns*:
        A :class:`gossipmon.search.SearchOutcome` object whose witness is a
        shortest :class:`gossipmon.monoid.CallSequence` multiplying to *a*.

    *Example*:

    .. testsetup::

        from gossipmon.semiring import BoolMatrix
        from gossipmon.solvers.membership import solve_gmp

    .. doctest::

        >>> solve_gmp(BoolMatrix.from_strings(['11', '01'])).status.verdict
        'no'
    """
    check_argument_type('solve_gmp', 'a', BoolMatrix, a)
    return solve_gtp(BoolMatrix.identity(a.n), a, budget)
