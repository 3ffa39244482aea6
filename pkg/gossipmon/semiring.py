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
This module provides boolean matrices over the boolean semiring together with
the generators of the gossip monoid.

The *boolean semiring* is the set :math:`\\{0, 1\\}` with maximum (logical
"or") as addition and logical "and" as multiplication.  A square matrix over it
records a state of knowledge in an :math:`n`-node network: the entry in row
:math:`i` and column :math:`j` is :math:`1` exactly if node :math:`j` has
learnt the piece of information initially held by node :math:`i`.  Right
multiplication by the *call matrix* :math:`C[i,j]` replaces columns :math:`i`
and :math:`j` with their element-wise maximum, which is a telephone call
between nodes :math:`i` and :math:`j`.

Indices are 1-based in every public function and in every text format.
Internally a matrix row is an integer whose bit :math:`j-1` holds the entry in
column :math:`j`, and a whole matrix has a canonical row-major integer *code*
(bit :math:`(i-1)n + (j-1)` holds entry :math:`(i,j)`), which the searches use
as a compact state key.
"""


from collections import namedtuple
from functools import lru_cache, total_ordering

from gossipmon.errors import DimensionError, OutOfRangeError
from gossipmon.utility.randomness import get_random_generator
from gossipmon.utility.validation import check_argument_type


__docformat__ = 'reStructuredText'


class CallPair(namedtuple('CallPair', ['i', 'j'])):
    """
    An unordered pair of distinct nodes, i.e. the index pair of the call matrix
    :math:`C[i,j]`.  The pair is stored normalized with :math:`i < j`, so
    sequences of calls compare and deduplicate structurally.

    *Example*:

    .. testsetup::

        from gossipmon.semiring import CallPair

    .. doctest::

        >>> CallPair(3, 1)
        CallPair(i=1, j=3)
    """

    __slots__ = ()

    def __new__(cls, i, j):
        """
        *Parameters*:
            - **i** (`int`): a 1-based node index;
            - **j** (`int`): a 1-based node index different from **i**.

        *Raises*:
            - **OutOfRangeError**: raised when an index is less than one or
              when both indices are equal.
        """
        check_argument_type(CallPair.__name__, 'i', int, i)
        check_argument_type(CallPair.__name__, 'j', int, j)
        if i < 1 or j < 1:
            raise OutOfRangeError('Parameters "i" and "j": node indices'
                                  ' start at one but (%d, %d) given!'
                                  % (i, j))
        if i == j:
            raise OutOfRangeError('Parameters "i" and "j": a call needs two'
                                  ' distinct nodes but (%d, %d) given!'
                                  % (i, j))
        if i > j:
            i, j = j, i
        return super(CallPair, cls).__new__(cls, i, j)

    def check_dimension(self, n):
        """
        Raises :class:`gossipmon.errors.OutOfRangeError` unless both nodes of
        the call exist in an :math:`n`-node network.
        """
        if self.j > n:
            raise OutOfRangeError('Call (%d, %d): node index %d is out of'
                                  ' range for dimension %d!'
                                  % (self.i, self.j, self.j, n))

    def __str__(self):
        return '%d %d' % (self.i, self.j)


class ConferenceSet(frozenset):
    """
    A set :math:`S` of 1-based node indices naming the conference call matrix
    :math:`C[S]`.  The empty set is permitted and denotes the identity.
    """

    def __new__(cls, indices=()):
        """
        *Parameters*:
            - **indices**: an iterable of positive `int` node indices.

        *Raises*:
            - **OutOfRangeError**: raised when an index is less than one.
        """
        indices = list(indices)
        for index in indices:
            check_argument_type(ConferenceSet.__name__, 'indices', int, index)
            if index < 1:
                raise OutOfRangeError('Parameter "indices": node indices'
                                      ' start at one but %d given!' % index)
        return super(ConferenceSet, cls).__new__(cls, indices)

    def check_dimension(self, n):
        """
        Raises :class:`gossipmon.errors.OutOfRangeError` unless every index
        of the set is at most *n*.
        """
        if self and max(self) > n:
            raise OutOfRangeError('Conference set: node index %d is out of'
                                  ' range for dimension %d!' % (max(self), n))

    def __repr__(self):
        return 'ConferenceSet(%s)' % sorted(self)


def _mask(indices):
    """
    Returns the row bit mask that has the bits of the given 1-based indices
    set.
    """
    mask = 0
    for index in indices:
        mask |= 1 << (index - 1)
    return mask


@total_ordering
class BoolMatrix(object):
    """
    This class implements an immutable square matrix over the boolean
    semiring.

    Matrices compare equal structurally, hash consistently (so they can key
    sets and dictionaries), and are totally ordered by their row-major
    sequence of entries.  Note that ``<`` and ``<=`` are this canonical total
    order, whereas the entry-wise partial order :math:`\\preceq` is
    :func:`mat_leq` (or :meth:`precedes`).
    """

    __slots__ = ('__n', '__rows', '__code')

    def __init__(self, n, rows):
        """
        *Parameters*:
            - **n** (`int`): the dimension of the matrix, at least one;
            - **rows**: a sequence of :math:`n` integers;  bit :math:`j-1` of
              the :math:`i`-th integer is the entry in row :math:`i` and
              column :math:`j`.

        *Raises*:
            - **OutOfRangeError**: raised when *n* is less than one;
            - **DimensionError**: raised when the number of rows is not *n* or
              when a row has bits outside of the first *n* columns.
        """
        check_argument_type(BoolMatrix.__name__, 'n', int, n)
        if n < 1:
            raise OutOfRangeError('Parameter "n": a matrix dimension cannot'
                                  ' be less than one but %d given!' % n)
        rows = tuple(rows)
        if len(rows) != n:
            raise DimensionError('Parameter "rows": %d rows expected but %d'
                                 ' given!' % (n, len(rows)))
        limit = 1 << n
        code = 0
        for index, row in enumerate(rows):
            if row < 0 or row >= limit:
                raise DimensionError('Parameter "rows": row %d does not fit'
                                     ' in %d columns!' % (index + 1, n))
            code |= row << (index * n)
        self.__n = n
        self.__rows = rows
        self.__code = code

    @classmethod
    def from_code(cls, n, code):
        """
        Returns the matrix of dimension *n* with the given canonical row-major
        code.
        """
        full = (1 << n) - 1
        return cls(n, [(code >> (index * n)) & full for index in range(n)])

    @classmethod
    def from_lists(cls, entries):
        """
        Returns the matrix with the given entries, a list of :math:`n` lists of
        :math:`n` values in :math:`\\{0, 1\\}`.

        *Example*:

        .. testsetup::

            from gossipmon.semiring import BoolMatrix

        .. doctest::

            >>> print(BoolMatrix.from_lists([[1, 1], [0, 1]]))
            11
            01
        """
        n = len(entries)
        rows = list()
        for index, entry_row in enumerate(entries):
            if len(entry_row) != n:
                raise DimensionError('Row %d: %d entries expected but %d'
                                     ' given!' % (index + 1, n,
                                                  len(entry_row)))
            row = 0
            for column, value in enumerate(entry_row):
                if value not in (0, 1):
                    raise OutOfRangeError('Row %d: entries must be 0 or 1'
                                          ' but %r given!'
                                          % (index + 1, value))
                if value:
                    row |= 1 << column
            rows.append(row)
        return cls(n, rows)

    @classmethod
    def from_strings(cls, lines):
        """
        Returns the matrix whose rows are given as strings over ``'0'`` and
        ``'1'``.
        """
        return cls.from_lists([[int(char) for char in line]
                               for line in lines])

    @classmethod
    def identity(cls, n):
        """
        Returns the identity matrix :math:`I_n`.
        """
        return cls(n, [1 << index for index in range(n)])

    @classmethod
    def ones(cls, n):
        """
        Returns the all-ones matrix of dimension *n*.
        """
        return cls(n, [(1 << n) - 1] * n)

    @classmethod
    def zeros(cls, n):
        """
        Returns the zero matrix of dimension *n*.
        """
        return cls(n, [0] * n)

    @classmethod
    def from_blocks(cls, heights, widths, grid):
        """
        Assembles a square matrix from a grid of blocks.

        *Parameters*:
            - **heights** (`list`): the heights of the block rows;
            - **widths** (`list`): the widths of the block columns;  both lists
              must sum to the same dimension;
            - **grid**: a list of block rows, each a list of blocks;  a block
              is ``0`` (all zeros), ``1`` (all ones) or a square
              :class:`BoolMatrix` whose dimension equals both the height and
              the width of its position.

        *Raises*:
            - **DimensionError**: raised when the shapes do not fit.
        """
        n = sum(heights)
        if n != sum(widths):
            raise DimensionError('Block heights sum to %d but widths sum to'
                                 ' %d!' % (n, sum(widths)))
        if len(grid) != len(heights):
            raise DimensionError('%d block rows expected but %d given!'
                                 % (len(heights), len(grid)))
        rows = list()
        for block_row, height in zip(grid, heights):
            if len(block_row) != len(widths):
                raise DimensionError('%d blocks per row expected but %d'
                                     ' given!' % (len(widths),
                                                  len(block_row)))
            for offset in range(height):
                row = 0
                shift = 0
                for block, width in zip(block_row, widths):
                    if isinstance(block, BoolMatrix):
                        if block.n != width or block.n != height:
                            raise DimensionError('A block of dimension %d'
                                                 ' cannot fill a %dx%d'
                                                 ' position!'
                                                 % (block.n, height, width))
                        row |= block.rows[offset] << shift
                    elif block == 1:
                        row |= ((1 << width) - 1) << shift
                    elif block != 0:
                        raise OutOfRangeError('A block must be 0, 1 or a'
                                              ' BoolMatrix but %r given!'
                                              % (block,))
                    shift += width
                rows.append(row)
        return cls(n, rows)

    @classmethod
    def from_partition(cls, n, blocks):
        """
        Returns the adjacency matrix of the equivalence relation on
        :math:`\\{1, \\ldots, n\\}` whose classes are the given *blocks*.

        *Raises*:
            - **OutOfRangeError**: raised when the blocks do not partition
              :math:`\\{1, \\ldots, n\\}`.
        """
        rows = [0] * n
        seen = set()
        for block in blocks:
            block = ConferenceSet(block)
            block.check_dimension(n)
            if seen & block:
                raise OutOfRangeError('Blocks of a partition must be'
                                      ' disjoint!')
            seen |= block
            mask = _mask(block)
            for index in block:
                rows[index - 1] = mask
        if len(seen) != n:
            raise OutOfRangeError('Blocks must cover all %d nodes!' % n)
        return cls(n, rows)

    @property
    def n(self):
        """
        (*Property*)  The dimension of the matrix.
        """
        return self.__n

    @property
    def rows(self):
        """
        (*Property*)  The rows as a tuple of integers (bit :math:`j-1` of a
        row holds the entry in column :math:`j`).
        """
        return self.__rows

    @property
    def code(self):
        """
        (*Property*)  The canonical row-major integer code of the matrix.
        """
        return self.__code

    def entry(self, i, j):
        """
        Returns the entry in row *i* and column *j* (1-based).
        """
        if not (1 <= i <= self.__n and 1 <= j <= self.__n):
            raise OutOfRangeError('Entry (%d, %d) is out of range for'
                                  ' dimension %d!' % (i, j, self.__n))
        return (self.__rows[i - 1] >> (j - 1)) & 1

    def column(self, j):
        """
        Returns column *j* (1-based) as an integer whose bit :math:`i-1` holds
        the entry in row :math:`i`.
        """
        if not 1 <= j <= self.__n:
            raise OutOfRangeError('Column %d is out of range for dimension'
                                  ' %d!' % (j, self.__n))
        value = 0
        for index, row in enumerate(self.__rows):
            value |= ((row >> (j - 1)) & 1) << index
        return value

    def columns(self):
        """
        Returns the list of all columns (see :meth:`column`).
        """
        return [self.column(j) for j in range(1, self.__n + 1)]

    def submatrix(self, row, column, size):
        """
        Returns the square submatrix of dimension *size* whose top-left entry
        is at the given 1-based position.
        """
        if row < 1 or column < 1 or row + size - 1 > self.__n \
                or column + size - 1 > self.__n:
            raise OutOfRangeError('A %dx%d block at (%d, %d) does not fit in'
                                  ' dimension %d!'
                                  % (size, size, row, column, self.__n))
        full = (1 << size) - 1
        return BoolMatrix(size, [(self.__rows[index] >> (column - 1)) & full
                                 for index in range(row - 1,
                                                    row - 1 + size)])

    def has_full_diagonal(self):
        """
        Returns `True` if every diagonal entry is :math:`1`.
        """
        return all((row >> index) & 1
                   for index, row in enumerate(self.__rows))

    def precedes(self, other):
        """
        Returns `True` if this matrix lies below *other* in the entry-wise
        order :math:`\\preceq` (see :func:`mat_leq`).
        """
        return mat_leq(self, other)

    def to_lists(self):
        """
        Returns the entries as a list of lists of integers.
        """
        return [[(row >> column) & 1 for column in range(self.__n)]
                for row in self.__rows]

    def to_strings(self):
        """
        Returns the rows as strings over ``'0'`` and ``'1'``.
        """
        return [''.join('1' if (row >> column) & 1 else '0'
                        for column in range(self.__n))
                for row in self.__rows]

    def __key(self):
        return (self.__n, ''.join(self.to_strings()))

    def __eq__(self, other):
        if not isinstance(other, BoolMatrix):
            return NotImplemented
        return self.__n == other.n and self.__code == other.code

    def __lt__(self, other):
        if not isinstance(other, BoolMatrix):
            return NotImplemented
        return self.__key() < other._BoolMatrix__key()

    def __hash__(self):
        return hash((self.__n, self.__code))

    def __mul__(self, other):
        if not isinstance(other, BoolMatrix):
            return NotImplemented
        return mat_mul(self, other)

    def __str__(self):
        return '\n'.join(self.to_strings())

    def __repr__(self):
        return 'BoolMatrix.from_strings(%r)' % self.to_strings()


def check_same_dimension(function, a, b):
    """
    Raises :class:`gossipmon.errors.DimensionError` unless both matrices have
    the same dimension.
    """
    check_argument_type(function, 'a', BoolMatrix, a)
    check_argument_type(function, 'b', BoolMatrix, b)
    if a.n != b.n:
        raise DimensionError('In "%s()": matrices of dimensions %d and %d'
                             ' cannot be combined!' % (function, a.n, b.n))

def mat_mul(a, b):
    """
    Returns the product :math:`AB` over the boolean semiring: entry
    :math:`(i,j)` is the maximum over :math:`k` of
    :math:`a_{i,k} b_{k,j}`.

    Row :math:`i` of the product is computed as the "or" of the rows of *b*
    selected by the set bits of row :math:`i` of *a*.

    *Raises*:
        - **DimensionError**: raised when the dimensions differ.

    *Example*:

    .. testsetup::

        from gossipmon.semiring import CallPair, call_matrix, mat_mul

    .. doctest::

        >>> print(mat_mul(call_matrix(3, CallPair(1, 2)),
        ...               call_matrix(3, CallPair(2, 3))))
        111
        111
        011
    """
    check_same_dimension('mat_mul', a, b)
    right = b.rows
    rows = list()
    for row in a.rows:
        value = 0
        while row:
            low = row & -row
            value |= right[low.bit_length() - 1]
            row ^= low
        rows.append(value)
    return BoolMatrix(a.n, rows)

def mat_leq(a, b):
    """
    Returns `True` if :math:`A \\preceq B`, that is, if every entry of *a* is
    less than or equal to the corresponding entry of *b*.

    *Raises*:
        - **DimensionError**: raised when the dimensions differ.
    """
    check_same_dimension('mat_leq', a, b)
    return a.code | b.code == b.code

def transpose(a):
    """
    Returns the transpose of *a*.
    """
    check_argument_type('transpose', 'a', BoolMatrix, a)
    return BoolMatrix(a.n, a.columns())

def call_matrix(n, pair):
    """
    Returns the call matrix :math:`C[i,j]` of dimension *n*: the identity
    with additional :math:`1` entries at :math:`(i,j)` and :math:`(j,i)`.

    *Raises*:
        - **OutOfRangeError**: raised when a node index exceeds *n*.
    """
    check_argument_type('call_matrix', 'pair', CallPair, pair)
    pair.check_dimension(n)
    rows = [1 << index for index in range(n)]
    mask = _mask(pair)
    rows[pair.i - 1] = mask
    rows[pair.j - 1] = mask
    return BoolMatrix(n, rows)

def conference_matrix(n, s):
    """
    Returns the conference call matrix :math:`C[S]` of dimension *n*: the
    identity with an all-ones block on :math:`S \\times S`.

    *Raises*:
        - **OutOfRangeError**: raised when a node index exceeds *n*.
    """
    s = ConferenceSet(s)
    s.check_dimension(n)
    rows = [1 << index for index in range(n)]
    mask = _mask(s)
    for index in s:
        rows[index - 1] = mask
    return BoolMatrix(n, rows)

def is_equivalence_matrix(a):
    """
    Returns `True` if *a* is the adjacency matrix of an equivalence relation,
    i.e. it is reflexive, symmetric and transitive.  These are exactly the
    idempotent elements of the gossip monoid.
    """
    check_argument_type('is_equivalence_matrix', 'a', BoolMatrix, a)
    return a.has_full_diagonal() \
        and a == transpose(a) \
        and mat_leq(mat_mul(a, a), a)

def random_matrix(n, probability=0.5, full_diagonal=False, generator=None):
    """
    Returns a random matrix of dimension *n* whose entries are :math:`1`
    independently with the given *probability*.

    *Parameters*:
        - **full_diagonal** (`bool`): if `True`, all diagonal entries are set;
        - **generator**: a :class:`gossipmon.utility.randomness._Randomness`
          object;  the shared generator is used if `None`.
    """
    if generator is None:
        generator = get_random_generator()
    rows = list()
    for index in range(n):
        row = generator.bits(n, probability)
        if full_diagonal:
            row |= 1 << index
        rows.append(row)
    return BoolMatrix(n, rows)


@lru_cache(maxsize=None)
def column_masks(n):
    """
    Returns, for every 0-based column, the code mask selecting that column in
    the canonical row-major code of an :math:`n \\times n` matrix.
    """
    masks = list()
    for column in range(n):
        mask = 0
        for row in range(n):
            mask |= 1 << (row * n + column)
        masks.append(mask)
    return tuple(masks)

def merge_columns(code, n, i, j):
    """
    Returns the code of the matrix obtained by replacing 0-based columns *i*
    and *j* (:math:`i < j`) with their maximum, i.e. the right product with a
    call matrix, computed directly on canonical codes.
    """
    masks = column_masks(n)
    shift = j - i
    merged = (code & masks[i]) | ((code & masks[j]) >> shift)
    return code | merged | (merged << shift)

def merge_rows(code, n, i, j):
    """
    Returns the code of the matrix obtained by replacing 0-based rows *i* and
    *j* with their maximum, i.e. the left product with a call matrix, computed
    directly on canonical codes.
    """
    full = (1 << n) - 1
    merged = ((code >> (i * n)) | (code >> (j * n))) & full
    return code | (merged << (i * n)) | (merged << (j * n))

def relation_of(n, blocks):
    """
    Returns the adjacency matrix of the equivalence relation whose classes are
    the given *blocks* (see :meth:`BoolMatrix.from_partition`).  It equals the
    product of the conference calls :math:`C[S]` over all blocks :math:`S`.
    """
    return BoolMatrix.from_partition(n, blocks)

def simulate(n, word):
    """
    Simulates a sequence of telephone calls in an :math:`n`-node network.

    Starting from :math:`I_n` (every node knows only its own piece of
    information), each call of *word* replaces the two columns of its nodes
    with their maximum.  The generator yields a pair ``(call, state)`` after
    every call.

    *Example*:

    .. testsetup::

        from gossipmon.semiring import CallPair, simulate

    .. doctest::

        >>> word = [CallPair(1, 2), CallPair(2, 3), CallPair(1, 2)]
        >>> print(list(simulate(3, word))[-1][1])
        111
        111
        111
    """
    state = BoolMatrix.identity(n)
    for pair in word:
        check_argument_type('simulate', 'word', CallPair, pair)
        pair.check_dimension(n)
        state = BoolMatrix.from_code(n, merge_columns(state.code, n,
                                                      pair.i - 1,
                                                      pair.j - 1))
        yield pair, state
