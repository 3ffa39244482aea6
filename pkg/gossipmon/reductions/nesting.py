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
Provides the nesting of an arbitrary boolean matrix inside a gossip monoid and
the reduction of the transformation problem to the J-order problem built on
it.

For :math:`A \\in B_n` with :math:`n \\geq 2` the :math:`n(n+1)`-dimensional
matrix

.. math::

    X = \\begin{bmatrix} 1 & A \\\\ 1 & 1 \\end{bmatrix}

(a top row band of height :math:`n`, a left column band of width
:math:`n^2`) is a member of :math:`G_{n(n+1)}`, with the factorization
:math:`X = X_1X_2X_3X_4` into conference calls

- :math:`X_1 = C[\\{n+1, \\ldots, n(n+1)\\}]`,
- :math:`X_2 = \\prod_i C[\\{i + n(j-1) : 1 \\leq j \\leq n\\}]`,
- :math:`X_3 = \\prod_j C[\\{i + n(j-1) : a_{i,j} = 1\\} \\cup \\{n^2+j\\}]`,
- :math:`X_4 = C[\\{1, \\ldots, n^2\\}]`.

Nesting :math:`[A, I_n; 0, 1]` and :math:`[B, I_n; 0, 1]` gives
matrices :math:`X, Y \\in G_{2n(2n+1)}` with :math:`Y \\leq_J X` if and only
if :math:`AG = B` for some :math:`G \\in G_n`.
"""


from dataclasses import dataclass
from typing import Tuple

from gossipmon.errors import OutOfRangeError, StructuralError, \
    VerificationError
from gossipmon.monoid import CallSequence, factor_conference
from gossipmon.semiring import BoolMatrix, ConferenceSet, \
    check_same_dimension
from gossipmon.utility import logger
from gossipmon.utility.validation import check_argument_type


__docformat__ = 'reStructuredText'


@dataclass(frozen=True)
class NestingFactorization:
    """
    The factorization :math:`X = X_1X_2X_3X_4` of a nested matrix into
    conference calls, and its expansion into a word of calls.
    """

    x1: ConferenceSet
    x2: Tuple[ConferenceSet, ...]
    x3: Tuple[ConferenceSet, ...]
    x4: ConferenceSet
    expanded: CallSequence

    def conferences(self):
        """
        Returns all conference sets of the factorization in order.
        """
        return (self.x1,) + self.x2 + self.x3 + (self.x4,)


@dataclass(frozen=True)
class GjpInstance:
    """
    An instance of the J-order problem asking whether
    :math:`\\mathit{lower} \\leq_J \\mathit{upper}`.  Both matrices are
    certified members of the gossip monoid by the words *upper_word* and
    *lower_word*.
    """

    upper: BoolMatrix
    lower: BoolMatrix
    upper_word: CallSequence
    lower_word: CallSequence
    source_n: int

    @property
    def x(self):
        """
        (*Property*)  The nested matrix of the initial matrix :math:`A`.
        """
        return self.upper

    @property
    def y(self):
        """
        (*Property*)  The nested matrix of the target matrix :math:`B`.
        """
        return self.lower


def nest_in_gossip(a):
    """
    Returns the nested matrix :math:`X = [1, A; 1, 1]` of dimension
    :math:`n(n+1)` together with its :class:`NestingFactorization`.  The
    expanded word is multiplied out and compared with :math:`X`.

    *Raises*:
        - **OutOfRangeError**: raised when *a* has dimension one;
        - **VerificationError**: raised when the factorization does not
          multiply out.

    *Example*:

    .. testsetup::

        from gossipmon.reductions.nesting import nest_in_gossip
        from gossipmon.semiring import BoolMatrix

    .. doctest::

        >>> x, factorization = nest_in_gossip(BoolMatrix.identity(2))
        >>> print(x)
        111110
        111101
        111111
        111111
        111111
        111111
    """
    check_argument_type('nest_in_gossip', 'a', BoolMatrix, a)
    n = a.n
    if n < 2:
        raise OutOfRangeError('Parameter "a": nesting needs a dimension of at'
                              ' least two but %d given!' % n)
    size = n * (n + 1)
    x = BoolMatrix.from_blocks([n, n * n], [n * n, n], [[1, a], [1, 1]])
    x1 = ConferenceSet(range(n + 1, size + 1))
    x2 = tuple(ConferenceSet(i + n * (j - 1) for j in range(1, n + 1))
               for i in range(1, n + 1))
    x3 = tuple(ConferenceSet([i + n * (j - 1) for i in range(1, n + 1)
                              if a.entry(i, j)] + [n * n + j])
               for j in range(1, n + 1))
    x4 = ConferenceSet(range(1, n * n + 1))
    expanded = CallSequence()
    for conference in (x1,) + x2 + x3 + (x4,):
        expanded = expanded + factor_conference(size, conference)
    if expanded.product(size) != x:
        raise VerificationError('The nesting factorization does not multiply'
                                ' out!')
    logger.get_logger('reductions.nesting').debug(
        'matrix of dimension %d nested in dimension %d (%d calls)', n, size,
        len(expanded))
    return x, NestingFactorization(x1, x2, x3, x4, expanded)

def _augmented(a):
    """
    Returns the :math:`2n`-dimensional block matrix
    :math:`[A, I_n; 0, 1]`.
    """
    n = a.n
    return BoolMatrix.from_blocks([n, n], [n, n],
                                  [[a, BoolMatrix.identity(n)], [0, 1]])

def reduce_gtp_to_gjp(a, b):
    """
    Builds the J-order instance of a transformation instance :math:`(A, B)`:
    the upper matrix nests :math:`[A, I_n; 0, 1]`, the lower one nests
    :math:`[B, I_n; 0, 1]`, both of dimension :math:`2n(2n+1)`.

    *Raises*:
        - **DimensionError**: raised when the dimensions differ.
    """
    check_same_dimension('reduce_gtp_to_gjp', a, b)
    upper, upper_factors = nest_in_gossip(_augmented(a))
    lower, lower_factors = nest_in_gossip(_augmented(b))
    logger.get_logger('reductions.nesting').info(
        'J-order instance of dimension %d built for n=%d', upper.n, a.n)
    return GjpInstance(upper, lower, upper_factors.expanded,
                       lower_factors.expanded, a.n)

def extract_gjp_witness_block(v_word, n):
    """
    Multiplies out the right word :math:`V` of a J-order witness on a reduced
    instance of source dimension *n* and returns its :math:`n \\times n` block
    :math:`G` at rows and columns :math:`(2n)^2 + 1, \\ldots, (2n)^2 + n`.
    :math:`V` must be block diagonal with blocks
    :math:`[1, (2n)^2]`, :math:`[(2n)^2 + 1, (2n)^2 + n]` and
    :math:`[(2n)^2 + n + 1, 2n(2n+1)]`.

    *Raises*:
        - **StructuralError**: raised when :math:`V` is not block diagonal.
    """
    check_argument_type('extract_gjp_witness_block', 'n', int, n)
    if n < 1:
        raise OutOfRangeError('Parameter "n": a source dimension cannot be'
                              ' less than one but %d given!' % n)
    size = 2 * n * (2 * n + 1)
    first = (2 * n) ** 2
    v = CallSequence(v_word).product(size)
    bounds = [(0, first), (first, first + n), (first + n, size)]
    for begin, end in bounds:
        inside = ((1 << end) - 1) ^ ((1 << begin) - 1)
        for row in range(begin, end):
            if v.rows[row] & ~inside:
                raise StructuralError('block-diagonal', 'Row %d of V leaves'
                                      ' its diagonal block!' % (row + 1))
    return v.submatrix(first + 1, first + 1, n)
