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
Provides a solver of the J-order problem: given :math:`X, Y \\in G_n`, is
:math:`X \\leq_J Y`, that is, are there :math:`U, V \\in G_n` such that
:math:`UYV = X`?

Both matrices must be members of :math:`G_n`.  Membership is a promise of the
problem rather than part of the question, so a non-member is reported as a
malformed instance and not as a negative answer.
"""


from dataclasses import dataclass

from gossipmon.errors import MalformedInstanceError
from gossipmon.generators.all_calls import AllCalls
from gossipmon.monoid import CallSequence, left_moves, right_moves
from gossipmon.search import DEFAULT_BUDGET, Status, check_budget, \
    pruned_search
from gossipmon.semiring import check_same_dimension
from gossipmon.solvers.membership import solve_gmp
from gossipmon.utility import logger


__docformat__ = 'reStructuredText'


@dataclass(frozen=True)
class GjpWitness:
    """
    A pair of words certifying :math:`UYV = X`:  *left* multiplies to
    :math:`U` and *right* multiplies to :math:`V`.
    """

    left: CallSequence
    right: CallSequence

    def apply(self, y):
        """
        Returns :math:`UYV`.
        """
        return self.right.apply(self.left.apply_left(y))


def solve_gjp(x, y, budget=DEFAULT_BUDGET, members_certified=False):
    """
    Decides whether :math:`UYV = X` for some :math:`U, V \\in G_n`.

    The search starts at :math:`Y` and multiplies by calls from the left and
    from the right, left moves first.  A state :math:`Z` with
    :math:`Z \\not\\preceq X` is pruned, because every partial product
    :math:`LYR` of a witness lies below :math:`UYV = X`.

    *Parameters*:
        - **x** (:class:`BoolMatrix`): the lower matrix;
        - **y** (:class:`BoolMatrix`): the upper matrix;
        - **budget** (`int`): the largest number of states to expand in
          each search;
        - **members_certified** (`bool`): if `True`, both matrices are known
          to be members of :math:`G_n` (e.g. by an explicit factorization) and
          membership is not searched for.

    *Returns*:
        A :class:`gossipmon.search.SearchOutcome` object whose witness is a
        :class:`GjpWitness`.  If a membership search runs out of budget, its
        inconclusive outcome is returned.

    *Raises*:
        - **MalformedInstanceError**: raised when a matrix is proven not to
          be a member of :math:`G_n`;
        - **DimensionError**: raised when the dimensions differ;
        - **BudgetError**: raised when *budget* is less than one.
    """
    check_same_dimension('solve_gjp', x, y)
    check_budget('solve_gjp', budget)
    log = logger.get_logger('solvers.gjp')
    if not members_certified:
        for name, matrix in (('x', x), ('y', y)):
            membership = solve_gmp(matrix, budget)
            if membership.status is Status.PROVEN_ABSENT:
                log.error('matrix "%s" is not a member of G_%d', name,
                          matrix.n)
                raise MalformedInstanceError('Parameter "%s": the matrix is'
                                             ' not a member of G_%d!'
                                             % (name, matrix.n))
            if membership.status is Status.INCONCLUSIVE:
                log.warning('membership of matrix "%s" is undecided', name)
                return membership
    pairs = AllCalls().pairs(x.n)
    moves = [(('left', pair), move) for pair, move in left_moves(x.n, pairs)]
    moves += [(('right', pair), move)
              for pair, move in right_moves(x.n, pairs)]
    outcome = pruned_search('solvers.gjp', y.code, x.code, moves, budget)
    if not outcome.found:
        return outcome
    # left calls act from the outside in, so U is their reversed order
    left = CallSequence(reversed([pair for side, pair in outcome.witness
                                  if side == 'left']))
    right = CallSequence(pair for side, pair in outcome.witness
                         if side == 'right')
    return outcome.with_witness(GjpWitness(left, right))
