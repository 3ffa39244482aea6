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
Provides the reduction of the dominating set problem to the restricted
transformation problem.

For a graph :math:`H` on :math:`n` vertices let :math:`M` be its closed
neighbourhood matrix (:math:`m_{i,j} = 1` iff :math:`i = j` or :math:`i` and
:math:`j` are adjacent) and let :math:`M'` be :math:`M` with every
non-maximal column replaced by a fixed maximal column :math:`m`.  The
:math:`3n \\times 3n` matrices

.. math::

    A = \\begin{bmatrix} M' & 0 & 0 \\\\ 0 & 1 & 1 \\\\ 0 & 0 & 0
        \\end{bmatrix}, \\qquad
    B = \\begin{bmatrix} M' & M' & 1 \\quad 0 \\\\ 1 & 1 & 1 \\\\ 0 & 0 & 0
        \\end{bmatrix}

(where the top-right band of :math:`B` is :math:`k` columns of ones followed
by :math:`n - k` columns of zeros) satisfy :math:`AG = B` for some
:math:`G \\in G_{3n}` if and only if :math:`H` has a dominating set of at most
:math:`k` vertices.
"""


from dataclasses import dataclass, field

import networkx as nx

from gossipmon.errors import InvalidWitnessError, MalformedInstanceError, \
    OutOfRangeError, VerificationError
from gossipmon.monoid import CallSequence, factor_conference
from gossipmon.semiring import BoolMatrix, check_same_dimension, mat_mul, \
    transpose
from gossipmon.solvers.transformation import check_maximal_column_condition
from gossipmon.solvers.verification import verify_dominating_set
from gossipmon.utility import logger
from gossipmon.utility.validation import check_argument_type


__docformat__ = 'reStructuredText'


@dataclass(frozen=True)
class MgtpInstance:
    """
    An instance :math:`(A, B)` of the restricted transformation problem.
    *source_n* and *k* record the dominating set instance it was built from.
    """

    a: BoolMatrix
    b: BoolMatrix
    source_n: int = field(default=0)
    k: int = field(default=0)

    def __post_init__(self):
        check_same_dimension('MgtpInstance', self.a, self.b)
        if not check_maximal_column_condition(self.a):
            raise MalformedInstanceError('The initial matrix does not'
                                         ' satisfy the maximal column'
                                         ' condition!')


def neighbourhood_matrix(h):
    """
    Returns the closed neighbourhood matrix :math:`M` of *h*:  entry
    :math:`(i,j)` is :math:`1` iff :math:`i = j` or :math:`\\{i,j\\}` is an
    edge.
    """
    n = h.number_of_nodes()
    rows = list()
    for vertex in range(1, n + 1):
        row = 1 << (vertex - 1)
        for neighbour in h.adj[vertex]:
            row |= 1 << (neighbour - 1)
        rows.append(row)
    return BoolMatrix(n, rows)

def _column_string(column, n):
    """
    Returns a column as a top-to-bottom string over ``'0'`` and ``'1'``.
    """
    return ''.join('1' if (column >> row) & 1 else '0' for row in range(n))

def maximal_columns(m):
    """
    Returns the 1-based indices of the columns of *m* that lie strictly below
    no other column.
    """
    columns = m.columns()
    return [index + 1 for index, column in enumerate(columns)
            if not any(column != other and column | other == other
                       for other in columns)]

def select_maximal_column(m):
    """
    Returns the index of the maximal column of *m* whose top-to-bottom entries
    are lexicographically least, the lowest index among equal columns.
    """
    return min(maximal_columns(m),
               key=lambda j: (_column_string(m.column(j), m.n), j))

def replace_non_maximal_columns(m):
    """
    Returns :math:`M'`, the matrix *m* with every non-maximal column replaced
    by the column chosen by :func:`select_maximal_column`.
    """
    keep = set(maximal_columns(m))
    chosen = m.column(select_maximal_column(m))
    columns = [m.column(j) if j in keep else chosen
               for j in range(1, m.n + 1)]
    # rows of the transpose are the columns
    return transpose(BoolMatrix(m.n, columns))

def reduce_ds_to_mgtp(h, k):
    """
    Builds the restricted transformation instance of a dominating set
    instance.  For :math:`k = n` every graph is a yes-instance and
    :math:`A = B = I_{3n}` is returned.

    *Parameters*:
        - **h** (:class:`networkx.Graph`): a graph on the vertices
          :math:`1, \\ldots, n`;
        - **k** (`int`): the largest allowed size of a dominating set.

    *Returns*:
        An :class:`MgtpInstance` object of dimension :math:`3n`.

    *Raises*:
        - **OutOfRangeError**: raised when *k* is not in
          :math:`1, \\ldots, n`.
    """
    check_argument_type('reduce_ds_to_mgtp', 'h', nx.Graph, h)
    check_argument_type('reduce_ds_to_mgtp', 'k', int, k)
    n = h.number_of_nodes()
    if not 1 <= k <= n:
        raise OutOfRangeError('Parameter "k": a value in 1..%d expected but'
                              ' %d given!' % (n, k))
    log = logger.get_logger('reductions.domination')
    if k == n:
        log.debug('k equals n, trivial instance emitted')
        identity = BoolMatrix.identity(3 * n)
        return MgtpInstance(identity, identity, n, k)
    replaced = replace_non_maximal_columns(neighbourhood_matrix(h))
    heights = [n, n, n]
    widths = [n, n, k, n - k]
    a = BoolMatrix.from_blocks(heights, widths, [[replaced, 0, 0, 0],
                                                 [0, 1, 1, 1],
                                                 [0, 0, 0, 0]])
    b = BoolMatrix.from_blocks(heights, widths, [[replaced, replaced, 1, 0],
                                                 [1, 1, 1, 1],
                                                 [0, 0, 0, 0]])
    log.info('instance of dimension %d built for n=%d, k=%d', 3 * n, n, k)
    return MgtpInstance(a, b, n, k)

def witness_mgtp_from_domination(h, k, d):
    """
    Translates a dominating set *d* of at most *k* vertices into a word
    :math:`G` with :math:`AG = B` on the instance of
    :func:`reduce_ds_to_mgtp`.

    Each chosen vertex :math:`j` (the :math:`r`-th smallest) is replaced by a
    maximal column :math:`j'` of :math:`M` lying above column :math:`j`, and
    column :math:`j'` is copied into column :math:`2n + r` by the call
    :math:`C[j', 2n+r]`.  The conference call on
    :math:`\\{2n+1, \\ldots, 2n+k\\}` then fills the band of ones, since the
    chosen columns cover every row, and finally :math:`C[i, n+i]` copies
    :math:`M'` into the middle block for every :math:`i`.

    *Raises*:
        - **InvalidWitnessError**: raised when *d* is not a dominating set of
          at most *k* vertices;
        - **VerificationError**: raised when the word does not multiply out.
    """
    instance = reduce_ds_to_mgtp(h, k)
    if not verify_dominating_set(h, k, d):
        raise InvalidWitnessError('Parameter "d": not a dominating set of at'
                                  ' most %d vertices!' % k)
    n = h.number_of_nodes()
    if k == n:
        return CallSequence()
    m = neighbourhood_matrix(h)
    maximal = maximal_columns(m)
    calls = list()
    for r, j in enumerate(sorted(d), 1):
        column = m.column(j)
        dominating = min(other for other in maximal
                         if column | m.column(other) == m.column(other))
        calls.append((dominating, 2 * n + r))
    word = CallSequence(calls)
    word = word + factor_conference(3 * n, range(2 * n + 1, 2 * n + k + 1))
    word = word + CallSequence((i, n + i) for i in range(1, n + 1))
    if mat_mul(instance.a, word.product(3 * n)) != instance.b:
        raise VerificationError('The translated dominating set does not'
                                ' transform A into B!')
    return word
