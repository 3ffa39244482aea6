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
This module generates and analyzes gossip monoids: exhaustive enumeration with
minimal word lengths, shortest words to a given knowledge state, minimal
factorizations of conference calls and the census of idempotents.

A word over the call generators is a :class:`CallSequence`;  its product,
applied to the identity by right multiplication, is the state of knowledge
reached after the calls are made in order.
"""


from concurrent.futures import ProcessPoolExecutor
from itertools import islice

from gossipmon.errors import BudgetError, DimensionError, \
    OutOfRangeError, VerificationError
from gossipmon.generators import GeneratorMode, get_generators
from gossipmon.generators._generators import index_pairs
from gossipmon.search import DEFAULT_BUDGET, pruned_search
from gossipmon.semiring import BoolMatrix, CallPair, ConferenceSet, \
    conference_matrix, mat_mul, merge_columns, merge_rows
from gossipmon.utility import logger
from gossipmon.utility.randomness import get_random_generator
from gossipmon.utility.validation import check_argument_type


__docformat__ = 'reStructuredText'


#: Frontier states handed to a worker process at once.
__CHUNK_SIZE = 4096


class CallSequence(tuple):
    """
    An ordered sequence of :class:`gossipmon.semiring.CallPair` objects, i.e. a
    word over the call generators.  The empty sequence denotes the identity.

    *Example*:

    .. testsetup::

        from gossipmon.monoid import CallSequence

    .. doctest::

        >>> word = CallSequence([(1, 2), (3, 2), (1, 2)])
        >>> print(word.product(3))
        111
        111
        111
        >>> print(word)
        1 2
        2 3
        1 2
    """

    def __new__(cls, calls=()):
        """
        *Parameters*:
            - **calls**: an iterable of :class:`CallPair` objects or of pairs
              of `int` node indices.
        """
        pairs = list()
        for call in calls:
            if not isinstance(call, CallPair):
                call = CallPair(*call)
            pairs.append(call)
        return super(CallSequence, cls).__new__(cls, pairs)

    def check_dimension(self, n):
        """
        Raises :class:`gossipmon.errors.OutOfRangeError` unless every call of
        the sequence is a call of an :math:`n`-node network.
        """
        for pair in self:
            pair.check_dimension(n)

    def apply(self, matrix):
        """
        Returns :math:`MC_1C_2 \\cdots C_q` for *matrix* :math:`M`, that is,
        the calls applied by right multiplication.
        """
        check_argument_type('apply', 'matrix', BoolMatrix, matrix)
        self.check_dimension(matrix.n)
        code = matrix.code
        for pair in self:
            code = merge_columns(code, matrix.n, pair.i - 1, pair.j - 1)
        return BoolMatrix.from_code(matrix.n, code)

    def apply_left(self, matrix):
        """
        Returns :math:`C_1C_2 \\cdots C_qM` for *matrix* :math:`M`, that is,
        the product of the sequence multiplied from the left.
        """
        check_argument_type('apply_left', 'matrix', BoolMatrix, matrix)
        self.check_dimension(matrix.n)
        code = matrix.code
        for pair in reversed(self):
            code = merge_rows(code, matrix.n, pair.i - 1, pair.j - 1)
        return BoolMatrix.from_code(matrix.n, code)

    def product(self, n):
        """
        Returns the product :math:`C_1C_2 \\cdots C_q` of dimension *n*.
        """
        return self.apply(BoolMatrix.identity(n))

    def lift(self, mapping):
        """
        Returns the sequence with every node index :math:`i` replaced by
        ``mapping(i)``;  it embeds a word of a smaller network into a block of
        a larger one.
        """
        return CallSequence(CallPair(mapping(pair.i), mapping(pair.j))
                            for pair in self)

    def __add__(self, other):
        return CallSequence(tuple(self) + tuple(other))

    def __getitem__(self, index):
        if isinstance(index, slice):
            return CallSequence(tuple.__getitem__(self, index))
        return tuple.__getitem__(self, index)

    def __str__(self):
        return '\n'.join(str(pair) for pair in self)

    def __repr__(self):
        return 'CallSequence(%r)' % [tuple(pair) for pair in self]


class MonoidEnumeration(object):
    """
    The elements of a monoid generated by call matrices, each with its minimal
    word length and one shortest witness word.

    Elements are kept as canonical matrix codes;  :class:`BoolMatrix
    <gossipmon.semiring.BoolMatrix>` objects are built only on request.
    """

    def __init__(self, n, mode, side, pairs, lengths, parents):
        """
        *Parameters*:
            - **n** (`int`): the dimension;
            - **mode** (:class:`GeneratorMode`): the generating set;
            - **side** (`str`): ``'right'`` or ``'left'``, the side on which
              generators multiplied during the closure;
            - **pairs** (`tuple`): the generators in search order;
            - **lengths** (`dict`): element code to minimal word length;
            - **parents** (`dict`): element code to the packed pair of its
              BFS parent code and generator index.
        """
        self.__n = n
        self.__mode = mode
        self.__side = side
        self.__pairs = pairs
        self.__lengths = lengths
        self.__parents = parents
        self.__shift = max(1, len(pairs).bit_length())
        self.__elements = None

    @property
    def n(self):
        """
        (*Property*)  The dimension of the enumerated monoid.
        """
        return self.__n

    @property
    def mode(self):
        """
        (*Property*)  The :class:`GeneratorMode` of the enumerated monoid.
        """
        return self.__mode

    @property
    def side(self):
        """
        (*Property*)  The side of the closure, ``'right'`` or ``'left'``.
        """
        return self.__side

    @property
    def count(self):
        """
        (*Property*)  The number of elements.
        """
        return len(self.__lengths)

    @property
    def diameter(self):
        """
        (*Property*)  The largest minimal word length over all elements.
        """
        return max(self.__lengths.values())

    @property
    def codes(self):
        """
        (*Property*)  A view of the canonical codes of all elements.
        """
        return self.__lengths.keys()

    @property
    def elements(self):
        """
        (*Property*)  The frozen set of all elements as :class:`BoolMatrix`
        objects.
        """
        if self.__elements is None:
            self.__elements = frozenset(BoolMatrix.from_code(self.__n, code)
                                        for code in self.__lengths)
        return self.__elements

    def __len__(self):
        return self.count

    def __contains__(self, matrix):
        return isinstance(matrix, BoolMatrix) and matrix.n == self.__n \
            and matrix.code in self.__lengths

    def min_length(self, matrix):
        """
        Returns the minimal word length of an element.

        *Raises*:
            - **KeyError**: raised when *matrix* is not an element.
        """
        return self.__lengths[matrix.code]

    def length_histogram(self):
        """
        Returns a list whose :math:`L`-th entry is the number of elements of
        minimal word length :math:`L`.
        """
        histogram = [0] * (self.diameter + 1)
        for length in self.__lengths.values():
            histogram[length] += 1
        return histogram

    def witness(self, matrix):
        """
        Returns a shortest :class:`CallSequence` whose product is *matrix*
        (the first one discovered by the breadth-first closure).

        *Raises*:
            - **KeyError**: raised when *matrix* is not an element.
        """
        code = matrix.code
        if code not in self.__lengths:
            raise KeyError('The matrix is not an element of the monoid!')
        mask = (1 << self.__shift) - 1
        word = list()
        while self.__parents[code] is not None:
            packed = self.__parents[code]
            word.append(self.__pairs[packed & mask])
            code = packed >> self.__shift
        # a right closure records the last call first
        if self.__side == 'right':
            word.reverse()
        return CallSequence(word)

    def idempotents(self):
        """
        Returns the set of elements :math:`E` with :math:`EE = E`.
        """
        result = set()
        for matrix in self.elements:
            if mat_mul(matrix, matrix) == matrix:
                result.add(matrix)
        return result


def _expand_chunk(arguments):
    """
    Returns, for every state of a frontier chunk, the list of its successor
    codes in generator order.  It runs inside worker processes.
    """
    n, pairs, side, chunk = arguments
    merge = merge_columns if side == 'right' else merge_rows
    return [[merge(state, n, i, j) for i, j in pairs] for state in chunk]

def _chunks(frontier, size):
    iterator = iter(frontier)
    while True:
        chunk = list(islice(iterator, size))
        if not chunk:
            return
        yield chunk

def enumerate_monoid(n, mode=GeneratorMode.ALL_CALLS, cap=None, side='right',
                     workers=1):
    """
    Enumerates the monoid generated by the call matrices of *mode* by a
    breadth-first closure of the identity :math:`I_n`.

    The minimal word length of an element is its distance from :math:`I_n`
    in the Cayley graph of the chosen side.  Each layer of the closure is
    expanded as a whole, in frontier order and in lexicographic generator
    order, so the result does not depend on the number of workers.

    *Parameters*:
        - **n** (`int`): the dimension;
        - **mode**: a generator mode (see :class:`GeneratorMode`);
        - **cap** (`int`): the largest dimension allowed, the default of
          *mode* if `None`;
        - **side** (`str`): ``'right'`` closes under right multiplication,
          ``'left'`` under left multiplication;
        - **workers** (`int`): the number of worker processes.

    *Returns*:
        A :class:`MonoidEnumeration` object.

    *Raises*:
        - **BudgetError**: raised when *n* exceeds the cap or *workers* is
          less than one;
        - **OutOfRangeError**: raised when *n* is less than one.

    *Example*:

    .. testsetup::

        from gossipmon.monoid import enumerate_monoid

    .. doctest::

        >>> enumeration = enumerate_monoid(3)
        >>> enumeration.count, enumeration.diameter
        (11, 3)
    """
    generators = get_generators(mode, cap)
    generators.check_cap(n)
    if side not in ('right', 'left'):
        raise ValueError('Parameter "side": "right" or "left" expected but'
                         ' "%s" given!' % side)
    check_argument_type('enumerate_monoid', 'workers', int, workers)
    if workers < 1:
        raise BudgetError('Parameter "workers": at least one worker'
                          ' expected but %d given!' % workers)
    log = logger.get_logger('monoid')
    pairs = generators.pairs(n)
    indices = index_pairs(pairs)
    shift = max(1, len(pairs).bit_length())
    root = BoolMatrix.identity(n).code
    lengths = {root: 0}
    parents = {root: None}
    frontier = [root]
    length = 0
    log.debug('enumeration of %s, n=%d, %s side, %d workers started',
              generators.mode, n, side, workers)
    executor = ProcessPoolExecutor(max_workers=workers) \
        if workers > 1 else None
    try:
        while frontier:
            length += 1
            if executor is None:
                expanded = _expand_chunk((n, indices, side, frontier))
            else:
                expanded = list()
                jobs = [(n, indices, side, chunk)
                        for chunk in _chunks(frontier, __CHUNK_SIZE)]
                for successors in executor.map(_expand_chunk, jobs):
                    expanded.extend(successors)
            layer = list()
            for state, successors in zip(frontier, expanded):
                for index, child in enumerate(successors):
                    if child not in lengths:
                        lengths[child] = length
                        parents[child] = (state << shift) | index
                        layer.append(child)
            log.debug('layer %d: %d new elements, %d in total', length,
                      len(layer), len(lengths))
            frontier = layer
    finally:
        if executor is not None:
            executor.shutdown()
    log.info('enumeration of %s, n=%d finished: %d elements, diameter %d',
             generators.mode, n, len(lengths), max(lengths.values()))
    return MonoidEnumeration(n, generators.mode, side, pairs, lengths,
                             parents)

def shortest_word_to(n, target, mode=GeneratorMode.ALL_CALLS,
                     budget=DEFAULT_BUDGET):
    """
    Searches for a shortest word over the generators of *mode* whose product
    equals *target*.

    Prefix products of a word applied to :math:`I_n` only grow in the order
    :math:`\\preceq`, so states that are not below *target* are pruned.

    *Returns*:
        A :class:`gossipmon.search.SearchOutcome` object whose witness is a
        :class:`CallSequence`.

    *Raises*:
        - **DimensionError**: raised when *target* is not of dimension *n*;
        - **BudgetError**: raised when *budget* is less than one.
    """
    check_argument_type('shortest_word_to', 'target', BoolMatrix, target)
    if target.n != n:
        raise DimensionError('Parameter "target": dimension %d expected but'
                             ' %d given!' % (n, target.n))
    pairs = get_generators(mode).pairs(n)
    outcome = pruned_search('monoid.shortest', BoolMatrix.identity(n).code,
                            target.code, right_moves(n, pairs), budget)
    if outcome.found:
        return outcome.with_witness(CallSequence(outcome.witness))
    return outcome

def right_moves(n, pairs):
    """
    Returns the search moves multiplying a state from the right by the calls
    of *pairs*.
    """
    return [(pair, lambda code, i=pair.i - 1, j=pair.j - 1:
             merge_columns(code, n, i, j)) for pair in pairs]

def left_moves(n, pairs):
    """
    Returns the search moves multiplying a state from the left by the calls
    of *pairs*.
    """
    return [(pair, lambda code, i=pair.i - 1, j=pair.j - 1:
             merge_rows(code, n, i, j)) for pair in pairs]

def factor_conference(n, s):
    """
    Returns a minimal word of call matrices whose product is the conference
    call :math:`C[S]`.

    The word has no calls for :math:`|S| \\leq 1`, the single call of the two
    nodes for :math:`|S| = 2` and three calls for :math:`|S| = 3`.  For
    :math:`|S| \\geq 4` the four smallest nodes :math:`h_1 < h_2 < h_3 < h_4`
    act as hubs:  every other node calls :math:`h_1`, the hubs exchange by
    :math:`(h_1,h_2), (h_3,h_4), (h_1,h_3), (h_2,h_4)`, and every other node
    calls :math:`h_1` again, which makes :math:`2|S| - 4` calls.

    *Raises*:
        - **OutOfRangeError**: raised when a node index exceeds *n*;
        - **VerificationError**: raised when the word does not multiply to
          :math:`C[S]`.

    *Example*:

    .. testsetup::

        from gossipmon.monoid import factor_conference

    .. doctest::

        >>> len(factor_conference(6, {1, 2, 3, 4, 5}))
        6
    """
    s = ConferenceSet(s)
    s.check_dimension(n)
    nodes = sorted(s)
    if len(nodes) <= 1:
        word = CallSequence()
    elif len(nodes) == 2:
        word = CallSequence([nodes])
    elif len(nodes) == 3:
        first, second, third = nodes
        word = CallSequence([(first, second), (second, third),
                             (first, second)])
    else:
        h1, h2, h3, h4 = nodes[:4]
        others = [(node, h1) for node in nodes[4:]]
        word = CallSequence(others + [(h1, h2), (h3, h4), (h1, h3),
                                      (h2, h4)] + others)
    if word.product(n) != conference_matrix(n, s):
        raise VerificationError('The factorization of the conference call'
                                ' on %s does not multiply out!' % nodes)
    return word

def gossip_number(n):
    """
    Returns the minimal number of calls after which every node of an
    :math:`n`-node network knows everything:  :math:`0, 1, 3` for
    :math:`n = 1, 2, 3` and :math:`2n - 4` for :math:`n \\geq 4`.
    """
    check_argument_type('gossip_number', 'n', int, n)
    if n < 1:
        raise OutOfRangeError('Parameter "n": a dimension cannot be less'
                              ' than one but %d given!' % n)
    if n <= 3:
        return (0, 1, 3)[n - 1]
    return 2 * n - 4

def idempotent_census(n, cap=None, enumeration=None):
    """
    Returns the set of idempotent elements of :math:`G_n`.  They are exactly
    the adjacency matrices of the equivalence relations on
    :math:`\\{1, \\ldots, n\\}`.

    *Parameters*:
        - **cap** (`int`): the enumeration cap (see :func:`enumerate_monoid`);
        - **enumeration** (:class:`MonoidEnumeration`): an existing
          enumeration of :math:`G_n` to reuse.
    """
    if enumeration is None:
        enumeration = enumerate_monoid(n, GeneratorMode.ALL_CALLS, cap)
    elif enumeration.n != n or enumeration.mode is not \
            GeneratorMode.ALL_CALLS:
        raise DimensionError('Parameter "enumeration": an enumeration of'
                             ' G_%d expected!' % n)
    return enumeration.idempotents()

def random_word(n, length, mode=GeneratorMode.ALL_CALLS, generator=None):
    """
    Returns a random :class:`CallSequence` of the given *length* over the
    generators of *mode*.
    """
    check_argument_type('random_word', 'length', int, length)
    if length < 0:
        raise OutOfRangeError('Parameter "length": a word length cannot be'
                              ' negative but %d given!' % length)
    if generator is None:
        generator = get_random_generator()
    pairs = get_generators(mode).pairs(n)
    if not pairs:
        return CallSequence()
    return CallSequence(generator.choice(pairs) for _ in range(length))

def conference_calls(n, blocks):
    """
    Returns the concatenated minimal factorizations of the conference calls
    of *blocks*, e.g. of the classes of a set partition.
    """
    word = CallSequence()
    for block in blocks:
        word = word + factor_conference(n, block)
    return word
