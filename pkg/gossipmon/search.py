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
Provides the three-valued outcome of the exact solvers and the pruned
breadth-first search they share.

Every solver explores states reachable from a root matrix by multiplication
with call matrices.  Multiplication by a call never decreases a matrix in the
entry-wise order :math:`\\preceq`, so a state that is not below the target can
never lead to it and is discarded.  Exhausting the remaining states therefore
proves that the target is unreachable, whereas running out of the node budget
proves nothing.
"""


from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Any

from gossipmon.errors import BudgetError
from gossipmon.utility import logger
from gossipmon.utility.validation import check_argument_type


__docformat__ = 'reStructuredText'


#: Default number of states a search may expand.
DEFAULT_BUDGET = 10 ** 7


class Status(Enum):
    """
    The status of a search.
    """

    FOUND = 'yes'
    PROVEN_ABSENT = 'no'
    INCONCLUSIVE = 'inconclusive'

    @property
    def verdict(self):
        """
        (*Property*)  The report word of the status: ``yes``, ``no`` or
        ``inconclusive``.
        """
        return self.value

    @property
    def exit_code(self):
        """
        (*Property*)  The command line exit code of the status.
        """
        return {Status.FOUND: 0,
                Status.PROVEN_ABSENT: 1,
                Status.INCONCLUSIVE: 2}[self]


@dataclass(frozen=True)
class SearchOutcome:
    """
    The result of an exact solver.

    A found outcome carries a witness that re-verifies by multiplication, a
    proven absent one means that the pruned state space was exhausted, and an
    inconclusive one means that *nodes_expanded* reached *budget*.
    """

    status: Status
    witness: Any = None
    nodes_expanded: int = 0
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.status is Status.FOUND:
            assert self.witness is not None, \
                   'A found outcome requires a witness!'
        else:
            assert self.witness is None, \
                   'Only a found outcome may carry a witness!'
        if self.status is Status.INCONCLUSIVE:
            assert self.nodes_expanded == self.budget, \
                   'An inconclusive outcome must exhaust its budget!'

    @property
    def found(self):
        """
        (*Property*)  `True` if the outcome is :attr:`Status.FOUND`.
        """
        return self.status is Status.FOUND

    def with_witness(self, witness):
        """
        Returns a copy of a found outcome with its witness replaced by
        *witness*, or the outcome itself if it is not found.
        """
        if not self.found:
            return self
        return SearchOutcome(self.status, witness, self.nodes_expanded,
                             self.budget)


def check_budget(function, budget):
    """
    Checks the node budget of a search.

    *Raises*:
        - **TypeError**: raised when *budget* is not an integer;
        - **BudgetError**: raised when *budget* is less than one.
    """
    check_argument_type(function, 'budget', int, budget)
    if budget < 1:
        raise BudgetError('Parameter "budget": a search budget must be'
                          ' positive but %d given!' % budget)
    return budget

def pruned_search(channel, root, target, moves, budget=DEFAULT_BUDGET):
    """
    Searches breadth-first for a sequence of moves leading from *root* to
    *target*, discarding every state that is not below *target*.

    States are canonical matrix codes (see :attr:`BoolMatrix.code
    <gossipmon.semiring.BoolMatrix.code>`), so :math:`Z \\preceq Y` reads
    ``Z | Y == Y``.  Moves are tried in the given order at every state and a
    child is tested against the target when it is generated, hence the first
    hit is a shortest witness and it is the same on every run.

    *Parameters*:
        - **channel** (`str`): the logging channel of the caller;
        - **root** (`int`): the code of the initial state;
        - **target** (`int`): the code of the wanted state;
        - **moves**: a sequence of pairs ``(label, function)`` where
          ``function`` maps a state code to the code of its successor;
        - **budget** (`int`): the largest number of states to expand.

    *Returns*:
        A :class:`SearchOutcome` object whose witness is the tuple of labels
        of the moves applied, in order.

    *Raises*:
        - **BudgetError**: raised when *budget* is less than one.
    """
    check_budget('pruned_search', budget)
    log = logger.get_logger(channel)
    log.debug('search started (budget %d, %d moves)', budget, len(moves))
    if root | target != target:
        log.info('search finished: no (root lies above the target)')
        return SearchOutcome(Status.PROVEN_ABSENT, None, 0, budget)
    if root == target:
        log.info('search finished: yes (root equals the target)')
        return SearchOutcome(Status.FOUND, (), 0, budget)
    parents = {root: None}
    queue = deque([root])
    expanded = 0
    while queue:
        if expanded >= budget:
            log.warning('search budget of %d states exhausted (%d states'
                        ' seen)', budget, len(parents))
            return SearchOutcome(Status.INCONCLUSIVE, None, expanded,
                                 budget)
        state = queue.popleft()
        expanded += 1
        for label, move in moves:
            child = move(state)
            if child == state or child in parents \
                    or child | target != target:
                continue
            parents[child] = (state, label)
            if child == target:
                witness = _path(parents, child)
                log.info('search finished: yes (%d states expanded,'
                         ' witness of length %d)', expanded, len(witness))
                return SearchOutcome(Status.FOUND, witness, expanded, budget)
            queue.append(child)
    log.info('search finished: no (%d states expanded)', expanded)
    return SearchOutcome(Status.PROVEN_ABSENT, None, expanded, budget)

def _path(parents, state):
    """
    Returns the labels of the moves leading to *state* from the root.
    """
    labels = list()
    while parents[state] is not None:
        state, label = parents[state]
        labels.append(label)
    labels.reverse()
    return tuple(labels)
