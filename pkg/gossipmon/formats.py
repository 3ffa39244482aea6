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
Provides parsers and writers of the plain-text formats used by the toolkit.

``BMAT v1`` (a boolean matrix)
    Line 1 holds the dimension :math:`n \\geq 1`;  lines 2 to :math:`n+1` hold
    the rows as strings of :math:`n` characters from ``0`` and ``1``.

``GRAPH v1`` (an undirected simple graph)
    Line 1 holds ``n m``, the numbers of vertices and edges;  each of the next
    :math:`m` lines holds an edge ``u v`` with :math:`1 \\leq u < v \\leq n`.

Words
    One call ``i j`` per line;  the empty file is the empty word.

Vertex sets
    Vertex indices separated by white space.

Reduction metadata
    A single line ``REDUCTION <name> source_n=<n> [k=<k>]``.

Blank lines are ignored everywhere except inside a matrix.  Every parser
raises :class:`gossipmon.errors.ParseError` with the number of the offending
line.
"""


import re
from dataclasses import dataclass
from typing import Optional

from gossipmon.errors import GossipError, ParseError
from gossipmon.monoid import CallSequence
from gossipmon.semiring import BoolMatrix, CallPair
from gossipmon.solvers.domination import make_graph


__docformat__ = 'reStructuredText'


#: The pattern of a reduction metadata line.
__METADATA = re.compile(r'^REDUCTION\s+(?P<name>[\w-]+)\s+'
                        r'source_n=(?P<n>\d+)(?:\s+k=(?P<k>\d+))?\s*$')


@dataclass(frozen=True)
class ReductionMetadata:
    """
    The metadata written next to the files of a reduced instance.
    """

    name: str
    source_n: int
    k: Optional[int] = None

    def __str__(self):
        line = 'REDUCTION %s source_n=%d' % (self.name, self.source_n)
        if self.k is not None:
            line += ' k=%d' % self.k
        return line


def _numbered(text):
    """
    Returns the pairs ``(line number, stripped line)`` of the non-blank lines
    of *text*.
    """
    return [(number, line.strip())
            for number, line in enumerate(text.splitlines(), 1)
            if line.strip()]

def _integers(line, number, count=None):
    try:
        values = [int(token) for token in line.split()]
    except ValueError:
        raise ParseError('integers expected but "%s" given' % line, number)
    if count is not None and len(values) != count:
        raise ParseError('%d integers expected but %d given'
                         % (count, len(values)), number)
    return values

def parse_matrix(text):
    """
    Parses a matrix in the ``BMAT v1`` format.

    *Example*:

    .. testsetup::

        from gossipmon.formats import parse_matrix

    .. doctest::

        >>> parse_matrix('2\\n11\\n01\\n').entry(1, 2)
        1
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError('the dimension is missing', 1)
    n = _integers(lines[0], 1, 1)[0]
    if n < 1:
        raise ParseError('the dimension must be positive but %d given' % n,
                         1)
    if len(lines) != n + 1:
        raise ParseError('%d rows expected but %d given'
                         % (n, len(lines) - 1), min(len(lines), n + 1) + 1)
    rows = list()
    for number, line in enumerate(lines[1:], 2):
        line = line.strip()
        if len(line) != n:
            raise ParseError('a row of %d characters expected but %d given'
                             % (n, len(line)), number)
        if set(line) - set('01'):
            raise ParseError('only "0" and "1" are allowed in a row',
                             number)
        rows.append(line)
    return BoolMatrix.from_strings(rows)

def format_matrix(matrix):
    """
    Returns *matrix* in the ``BMAT v1`` format.
    """
    return '%d\n%s\n' % (matrix.n, '\n'.join(matrix.to_strings()))

def parse_graph(text):
    """
    Parses a graph in the ``GRAPH v1`` format and returns a
    :class:`networkx.Graph` object on the vertices :math:`1, \\ldots, n`.
    """
    lines = _numbered(text)
    if not lines:
        raise ParseError('the header "n m" is missing', 1)
    number, header = lines[0]
    n, m = _integers(header, number, 2)
    if n < 1 or m < 0:
        raise ParseError('a positive n and a non-negative m expected',
                         number)
    if len(lines) - 1 != m:
        raise ParseError('%d edges expected but %d given'
                         % (m, len(lines) - 1), lines[-1][0])
    edges = set()
    for number, line in lines[1:]:
        u, v = _integers(line, number, 2)
        if u == v:
            raise ParseError('loops are not allowed', number)
        if not 1 <= u < v <= n:
            raise ParseError('an edge "u v" with 1 <= u < v <= %d expected'
                             % n, number)
        if (u, v) in edges:
            raise ParseError('duplicate edge', number)
        edges.add((u, v))
    return make_graph(n, sorted(edges))

def format_graph(graph):
    """
    Returns *graph* in the ``GRAPH v1`` format.
    """
    edges = sorted(tuple(sorted(edge)) for edge in graph.edges())
    lines = ['%d %d' % (graph.number_of_nodes(), len(edges))]
    lines += ['%d %d' % edge for edge in edges]
    return '\n'.join(lines) + '\n'

def parse_word(text):
    """
    Parses a word of calls, one ``i j`` pair per line.
    """
    calls = list()
    for number, line in _numbered(text):
        i, j = _integers(line, number, 2)
        try:
            calls.append(CallPair(i, j))
        except GossipError as error:
            raise ParseError(str(error), number)
    return CallSequence(calls)

def format_word(word):
    """
    Returns *word* with one call per line.
    """
    return ''.join(str(pair) + '\n' for pair in word)

def parse_vertex_set(text):
    """
    Parses a set of positive vertex indices.
    """
    vertices = set()
    for number, line in _numbered(text):
        for vertex in _integers(line, number):
            if vertex < 1:
                raise ParseError('vertices start at one but %d given'
                                 % vertex, number)
            vertices.add(vertex)
    return frozenset(vertices)

def format_vertex_set(vertices):
    """
    Returns *vertices* in increasing order on a single line.
    """
    return ' '.join(str(vertex) for vertex in sorted(vertices)) + '\n'

def parse_metadata(text):
    """
    Parses a reduction metadata line.
    """
    lines = _numbered(text)
    if len(lines) != 1:
        raise ParseError('exactly one metadata line expected',
                         lines[1][0] if len(lines) > 1 else 1)
    number, line = lines[0]
    match = __METADATA.match(line)
    if match is None:
        raise ParseError('"REDUCTION <name> source_n=<n> [k=<k>]" expected',
                         number)
    k = match.group('k')
    return ReductionMetadata(match.group('name'), int(match.group('n')),
                             None if k is None else int(k))

def format_metadata(metadata):
    """
    Returns *metadata* as a single line.
    """
    return '%s\n' % metadata

def load(path, parser):
    """
    Reads the file at *path* and parses it with *parser*.

    *Raises*:
        - **ParseError**: raised when the content is malformed;  the message
          names the file;
        - **OSError**: raised when the file cannot be read.
    """
    with open(path, 'r') as stream:
        text = stream.read()
    try:
        return parser(text)
    except ParseError as error:
        raise ParseError('%s: %s' % (path, error.reason), error.line)

def dump(path, text):
    """
    Writes *text* to the file at *path*.
    """
    with open(path, 'w') as stream:
        stream.write(text)
