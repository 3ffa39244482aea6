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
Provides undirected graphs and an exhaustive solver of the dominating set
problem.  A set :math:`D` of vertices *dominates* a graph if every vertex is
in :math:`D` or adjacent to a vertex of :math:`D`.

Graphs are :class:`networkx.Graph` objects on the vertices
:math:`1, \\ldots, n`.
"""


from itertools import combinations

import networkx as nx

from gossipmon.errors import OutOfRangeError
from gossipmon.utility import logger
from gossipmon.utility.validation import check_argument_type


__docformat__ = 'reStructuredText'


def make_graph(n, edges=()):
    """
    Returns a simple undirected graph on the vertices :math:`1, \\ldots, n`.

    *Parameters*:
        - **n** (`int`): the number of vertices, at least one;
        - **edges**: an iterable of pairs of vertices.

    *Raises*:
        - **OutOfRangeError**: raised when *n* is less than one, when a vertex
          is out of range, or when an edge is a loop or a duplicate.
    """
    check_argument_type('make_graph', 'n', int, n)
    if n < 1:
        raise OutOfRangeError('Parameter "n": a graph needs at least one'
                              ' vertex but %d given!' % n)
    graph = nx.Graph()
    graph.add_nodes_from(range(1, n + 1))
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise OutOfRangeError('Edge (%d, %d): vertices must lie in'
                                  ' 1..%d!' % (u, v, n))
        if u == v:
            raise OutOfRangeError('Edge (%d, %d): loops are not allowed!'
                                  % (u, v))
        if graph.has_edge(u, v):
            raise OutOfRangeError('Edge (%d, %d): duplicate edge!' % (u, v))
        graph.add_edge(u, v)
    return graph

def solve_dominating_set(h, k):
    """
    Returns a smallest dominating set of *h* if it has at most *k* vertices,
    and `None` otherwise.

    Subsets are tried in order of increasing size and, within a size, in
    lexicographic order, so the answer is the lexicographically least among
    the smallest dominating sets.

    *Raises*:
        - **OutOfRangeError**: raised when *k* is not in
          :math:`1, \\ldots, n`.

    *Example*:

    .. testsetup::

        from gossipmon.solvers.domination import make_graph, \\
            solve_dominating_set

    .. doctest::

        >>> sorted(solve_dominating_set(make_graph(3, [(1, 2), (2, 3)]), 1))
        [2]
    """
    check_argument_type('solve_dominating_set', 'h', nx.Graph, h)
    check_argument_type('solve_dominating_set', 'k', int, k)
    n = h.number_of_nodes()
    if not 1 <= k <= n:
        raise OutOfRangeError('Parameter "k": a value in 1..%d expected but'
                              ' %d given!' % (n, k))
    log = logger.get_logger('solvers.domination')
    vertices = sorted(h.nodes())
    for size in range(1, k + 1):
        for candidate in combinations(vertices, size):
            if nx.is_dominating_set(h, candidate):
                log.info('dominating set of size %d found', size)
                return frozenset(candidate)
    log.info('no dominating set of size at most %d', k)
    return None
