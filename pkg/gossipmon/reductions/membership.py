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
Provides the reduction of the restricted transformation problem to the
membership problem.

For :math:`A, B \\in B_n` with :math:`n \\geq 2`, where :math:`A` satisfies
the maximal column condition, the :math:`n(n+4)`-dimensional block matrix
(see :class:`gossipmon.reductions._layout.BlockLayout`)

.. math::

    C = \\begin{bmatrix}
        1 & A   & A & 0   & B \\\\
        1 & 1   & 1 & 0   & 1 \\\\
        0 & 0   & 1 & I_n & 1 \\\\
        0 & I_n & 1 & I_n & 1 \\\\
        0 & I_n & 1 & I_n & 1
        \\end{bmatrix}

is a member of :math:`G_{n(n+4)}` if and only if :math:`AG = B` for some
:math:`G \\in G_n`.  For :math:`n = 1` the instance is :math:`C = [1]` if
:math:`A = B` and :math:`C = [0]` otherwise.

Witnesses translate in both directions:  :func:`witness_gmp_from_mgtp` turns
a word for :math:`G` into a word for :math:`C`, and :func:`extract_mgtp_witness`
recovers a word for some suitable :math:`G` from any word for :math:`C`.
"""


from dataclasses import dataclass
from typing import Optional

from gossipmon.errors import InvalidWitnessError, MalformedInstanceError, \
    StructuralError, VerificationError
from gossipmon.monoid import CallSequence, factor_conference
from gossipmon.reductions._layout import BlockLayout
from gossipmon.reductions.nesting import nest_in_gossip
from gossipmon.semiring import BoolMatrix, CallPair, check_same_dimension, \
    merge_columns
from gossipmon.solvers.transformation import check_maximal_column_condition
from gossipmon.utility import logger


__docformat__ = 'reStructuredText'


@dataclass(frozen=True)
class GmpInstance:
    """
    A reduced membership instance:  the matrix *c* and, for a source dimension
    of at least two, the layout of its blocks.
    """

    c: BoolMatrix
    source_n: int
    layout: Optional[BlockLayout] = None


def reduce_mgtp_to_gmp(a, b):
    """
    Builds the membership instance of a restricted transformation instance.

    *Raises*:
        - **DimensionError**: raised when the dimensions differ;
        - **MalformedInstanceError**: raised when *a* violates the maximal
          column condition.

    *Example*:

    .. testsetup::

        from gossipmon.reductions.membership import reduce_mgtp_to_gmp
        from gossipmon.semiring import BoolMatrix

    .. doctest::

        >>> instance = reduce_mgtp_to_gmp(BoolMatrix.identity(2),
        ...                               BoolMatrix.ones(2))
        >>> instance.c.n
        12
    """
    check_same_dimension('reduce_mgtp_to_gmp', a, b)
    if not check_maximal_column_condition(a):
        raise MalformedInstanceError('Parameter "a": the initial matrix does'
                                     ' not satisfy the maximal column'
                                     ' condition!')
    n = a.n
    if n == 1:
        c = BoolMatrix.identity(1) if a == b else BoolMatrix.zeros(1)
        return GmpInstance(c, n)
    layout = BlockLayout(n)
    identity = BoolMatrix.identity(n)
    c = BoolMatrix.from_blocks(layout.heights, layout.widths,
                               [[1, a, a, 0, b],
                                [1, 1, 1, 0, 1],
                                [0, 0, 1, identity, 1],
                                [0, identity, 1, identity, 1],
                                [0, identity, 1, identity, 1]])
    logger.get_logger('reductions.membership').info(
        'membership instance of dimension %d built for n=%d', c.n, n)
    return GmpInstance(c, n, layout)

def witness_gmp_from_mgtp(a, b, g_word):
    """
    Translates a word for :math:`G` with :math:`AG = B` into a word whose
    product is the matrix :math:`C` of :func:`reduce_mgtp_to_gmp`.

    The word is the concatenation of

    1. the nesting factorization of :math:`[1, A; 1, 1]` on the blocks *a*
       and *b*;
    2. the calls :math:`C[d_i, e_i]`;
    3. the calls :math:`C[c_i, d_i]`;
    4. the conference call on the block *c*;
    5. the calls :math:`C[b_i, e_i]`;
    6. the calls :math:`C[c_i, e_i]`;
    7. the word of :math:`G` moved to the block *e*.

    *Raises*:
        - **InvalidWitnessError**: raised when :math:`AG \\neq B`;
        - **VerificationError**: raised when the word does not multiply out.
    """
    instance = reduce_mgtp_to_gmp(a, b)
    n = a.n
    g_word = CallSequence(g_word)
    g_word.check_dimension(n)
    if g_word.apply(a) != b:
        raise InvalidWitnessError('Parameter "g_word": the word does not'
                                  ' transform A into B!')
    if n == 1:
        return CallSequence()
    layout = instance.layout
    nodes = range(1, n + 1)
    word = nest_in_gossip(a)[1].expanded
    word = word + CallSequence((layout.d(i), layout.e(i)) for i in nodes)
    word = word + CallSequence((layout.c(i), layout.d(i)) for i in nodes)
    word = word + factor_conference(layout.size, layout.indices('c'))
    word = word + CallSequence((layout.b(i), layout.e(i)) for i in nodes)
    word = word + CallSequence((layout.c(i), layout.e(i)) for i in nodes)
    word = word + g_word.lift(layout.e)
    if word.product(layout.size) != instance.c:
        raise VerificationError('The translated word does not multiply to'
                                ' the membership instance!')
    logger.get_logger('reductions.membership').debug(
        'membership witness of %d calls emitted', len(word))
    return word

def strip_redundant(n, word):
    """
    Returns *word* without the calls that do not change the running product,
    so that every prefix product of the result strictly increases.  The
    product of the word is unchanged.
    """
    code = BoolMatrix.identity(n).code
    kept = list()
    for pair in CallSequence(word):
        pair.check_dimension(n)
        following = merge_columns(code, n, pair.i - 1, pair.j - 1)
        if following != code:
            kept.append(pair)
            code = following
    return CallSequence(kept)

def _top_mask(layout, index):
    """
    Returns the code mask of the entries of column *index* in the first row
    block.
    """
    size = layout.size
    mask = 0
    for row in range(layout.n):
        mask |= 1 << (row * size + index - 1)
    return mask

def extract_mgtp_witness(a, b, c_word):
    """
    Recovers, from any word whose product is the matrix :math:`C` of
    :func:`reduce_mgtp_to_gmp`, a word for some :math:`G \\in G_n` with
    :math:`AG = B`.

    Redundant calls are stripped first.  Then no call may join a node of the
    blocks *a*, *b* with a node of the blocks *c*, *d*, *e*, except the calls
    :math:`C[b_k, e_k]`, each of which occurs exactly once, at a position
    :math:`w_k`.  From that moment column :math:`e_k` holds column :math:`k`
    of :math:`A` in its first row block, and only calls :math:`C[e_i, e_j]`
    made after both :math:`w_i` and :math:`w_j` change it.  These calls, read
    as the calls :math:`(i, j)` of an :math:`n`-node network, form the
    result.

    *Raises*:
        - **InvalidWitnessError**: raised when *c_word* does not multiply to
          :math:`C`;
        - **StructuralError**: raised when one of the properties above is
          violated;  its ``claim`` names the property (``'crossing-call'``,
          ``'unique-bridge'``, ``'late-modification'`` or ``'product'``).
    """
    instance = reduce_mgtp_to_gmp(a, b)
    n = a.n
    size = instance.c.n
    c_word = CallSequence(c_word)
    c_word.check_dimension(size)
    if c_word.product(size) != instance.c:
        raise InvalidWitnessError('Parameter "c_word": the word does not'
                                  ' multiply to the membership instance!')
    if n == 1:
        return CallSequence()
    log = logger.get_logger('reductions.membership')
    layout = instance.layout
    word = strip_redundant(size, c_word)
    log.debug('%d of %d calls kept after stripping', len(word), len(c_word))
    bridges = dict()
    for position, pair in enumerate(word):
        first, second = layout.block_of(pair.i), layout.block_of(pair.j)
        if (first[0] in 'ab') == (second[0] in 'ab'):
            continue
        if {first[0], second[0]} != {'b', 'e'} or first[1] != second[1]:
            raise StructuralError('crossing-call', 'Call (%d, %d) at'
                                  ' position %d joins the blocks %s and %s!'
                                  % (pair.i, pair.j, position + 1, first[0],
                                     second[0]))
        if first[1] in bridges:
            raise StructuralError('unique-bridge', 'Call (%d, %d) occurs'
                                  ' more than once!' % (pair.i, pair.j))
        bridges[first[1]] = position
    missing = [k for k in range(1, n + 1) if k not in bridges]
    if missing:
        raise StructuralError('unique-bridge', 'No call joins b_%d and'
                              ' e_%d!' % (missing[0], missing[0]))
    masks = {k: _top_mask(layout, layout.e(k)) for k in range(1, n + 1)}
    code = BoolMatrix.identity(size).code
    calls = list()
    for position, pair in enumerate(word):
        following = merge_columns(code, size, pair.i - 1, pair.j - 1)
        first, second = layout.block_of(pair.i), layout.block_of(pair.j)
        late = first[0] == second[0] == 'e' \
            and bridges[first[1]] < position \
            and bridges[second[1]] < position
        for k, mask in masks.items():
            if bridges[k] < position and (code ^ following) & mask \
                    and not late:
                raise StructuralError('late-modification', 'Call (%d, %d)'
                                      ' at position %d changes column e_%d'
                                      ' after its bridge!'
                                      % (pair.i, pair.j, position + 1, k))
        if late:
            calls.append(CallPair(first[1], second[1]))
        code = following
    g_word = CallSequence(calls)
    if g_word.apply(a) != b:
        raise StructuralError('product', 'The extracted word does not'
                              ' transform A into B!')
    log.info('word of %d calls extracted from %d calls', len(g_word),
             len(c_word))
    return g_word
