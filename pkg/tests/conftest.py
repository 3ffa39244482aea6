# -*- coding: utf-8 -*-

"""
Shared fixtures and brute-force oracles of the test suite.

The oracles are written from the definitions only and share no code with the
searches and enumerations they check.
"""


from itertools import product

import pytest

from gossipmon.semiring import BoolMatrix
from gossipmon.utility.randomness import get_random_generator


#: Seed of every randomized test.
SEED = 20240611


def _naive_product(a, b):
    """
    Triple-loop product over the boolean semiring.
    """
    left, right = a.to_lists(), b.to_lists()
    n = len(left)
    return BoolMatrix.from_lists(
        [[max(left[i][k] * right[k][j] for k in range(n))
          for j in range(n)] for i in range(n)])

def _set_partitions(elements):
    """
    Yields all set partitions of the list *elements* as lists of blocks.
    """
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for partition in _set_partitions(rest):
        yield [[first]] + partition
        for index in range(len(partition)):
            yield partition[:index] + [[first] + partition[index]] \
                + partition[index + 1:]

def _all_matrices(n, full_diagonal=False):
    """
    Yields every matrix of B_n, or every matrix with a full diagonal.
    """
    for bits in product((0, 1), repeat=n * n):
        entries = [list(bits[row * n:(row + 1) * n]) for row in range(n)]
        if full_diagonal and not all(entries[i][i] for i in range(n)):
            continue
        yield BoolMatrix.from_lists(entries)

def _dominating_oracle(n, edges, k):
    """
    Returns True if some set of at most k vertices dominates the graph.
    """
    neighbours = {vertex: {vertex} for vertex in range(1, n + 1)}
    for u, v in edges:
        neighbours[u].add(v)
        neighbours[v].add(u)
    for mask in range(1, 1 << n):
        chosen = [vertex for vertex in range(1, n + 1)
                  if mask >> (vertex - 1) & 1]
        if len(chosen) > k:
            continue
        covered = set()
        for vertex in chosen:
            covered |= neighbours[vertex]
        if len(covered) == n:
            return True
    return False

def _all_graphs(n):
    """
    Yields the edge lists of all simple graphs on the vertices 1..n.
    """
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    for mask in range(1 << len(pairs)):
        yield [pair for index, pair in enumerate(pairs) if mask >> index & 1]


@pytest.fixture
def generator():
    """
    The shared random generator, re-seeded for every test.
    """
    return get_random_generator(SEED)

@pytest.fixture
def naive_product():
    return _naive_product

@pytest.fixture
def set_partitions():
    return _set_partitions

@pytest.fixture
def all_matrices():
    return _all_matrices

@pytest.fixture
def dominating_oracle():
    return _dominating_oracle

@pytest.fixture
def all_graphs():
    return _all_graphs
