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
Provides solvers of the transformation problem: given :math:`X, Y \\in B_n`,
is there a :math:`G \\in G_n` such that :math:`XG = Y`?  A witness is a word of
calls whose product is :math:`G`.

The restricted variant requires :math:`X` to satisfy the *maximal column
condition*: :math:`X` is non-zero and its distinct columns form an antichain
in the entry-wise order, which means that every column is non-zero and none
lies strictly below another.
"""


from gossipmon.errors import MalformedInstanceError
from gossipmon.generators.all_calls import AllCalls
from gossipmon.monoid import CallSequence, right_moves
from gossipmon.search import DEFAULT_BUDGET, pruned_search
from gossipmon.semiring import BoolMatrix, check_same_dimension
from gossipmon.utility import logger
from gossipmon.utility.validation import check_argument_type


__docformat__ = 'reStructuredText'


def solve_gtp(x, y, budget=DEFAULT_BUDGET):
    """
    Decides whether :math:`XG = Y` for some :math:`G \\in G_n`.

    The search starts at :math:`X` and multiplies from the right by calls.
    A state :math:`Z` with :math:`Z \\not\\preceq Y` is pruned:  every prefix
    :math:`XC_1 \\cdots C_r` of a witness lies below :math:`Y`, hence an
    exhausted search proves that no witness exists.

    *Parameters*:
        - **x** (:class:`BoolMatrix`): the initial matrix;
        - **y** (:class:`BoolMatrix`): the target matrix;
        - **budget** (`int`): the largest number of states to expand.

    *Returns*:
        A :class:`gossipmon.search.SearchOutcome` object whose witness is a
        shortest :class:`gossipmon.monoid.CallSequence`.

    *Raises*:
        - **DimensionError**: raised when the dimensions differ;
        - **BudgetError**: raised when *budget* is less than one.

    *Example*:

    .. testsetup::

        from gossipmon.semiring import BoolMatrix
        from gossipmon.solvers.transformation import solve_gtp

    .. doctest::

        >>> outcome = solve_gtp(BoolMatrix.identity(2), BoolMatrix.ones(2))
        >>> outcome.status.verdict, str(outcome.witness)
        ('yes', '1 2')
    """
    check_same_dimension('solve_gtp', x, y)
    pairs = AllCalls().pairs(x.n)
    outcome = pruned_search('solvers.gtp', x.code, y.code,
                            right_moves(x.n, pairs), budget)
    if outcome.found:
        return outcome.with_witness(CallSequence(outcome.witness))
    return outcome

def check_maximal_column_condition(x):
    """
    Returns `True` if *x* is non-zero, every column of *x* is non-zero and no
    column lies strictly below another one.

    *Example*:

    .. testsetup::

        from gossipmon.semiring import BoolMatrix
        from gossipmon.solvers.transformation import \\
            check_maximal_column_condition

    .. doctest::

        >>> check_maximal_column_condition(BoolMatrix.identity(3))
        True
        >>> check_maximal_column_condition(
        ...     BoolMatrix.from_strings(['11', '01']))
        False
    """
    check_argument_type('check_maximal_column_condition', 'x', BoolMatrix, x)
    columns = set(x.columns())
    if 0 in columns:
        return False
    for column in columns:
        for other in columns:
            if column != other and column | other == other:
                return False
    return True

def solve_mgtp(a, b, budget=DEFAULT_BUDGET):
    """
    Decides the transformation problem restricted to instances whose initial
    matrix satisfies the maximal column condition (see :func:`solve_gtp`).

    *Raises*:
        - **MalformedInstanceError**: raised when *a* violates the maximal
          column condition;
        - **DimensionError**: raised when the dimensions differ;
        - **BudgetError**: raised when *budget* is less than one.
    """
    check_same_dimension('solve_mgtp', a, b)
    if not check_maximal_column_condition(a):
        logger.get_logger('solvers.mgtp').error(
            'initial matrix violates the maximal column condition')
        raise MalformedInstanceError('Parameter "a": the initial matrix'
                                     ' does not satisfy the maximal column'
                                     ' condition!')
    return solve_gtp(a, b, budget)
