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
Provides verifiers of witnesses.  They multiply witnesses out with
:func:`gossipmon.semiring.mat_mul` and share no code with the searches that
produce the witnesses.
"""


from functools import reduce

from gossipmon.errors import GossipError
from gossipmon.semiring import BoolMatrix, call_matrix, mat_mul
from gossipmon.utility import logger


__docformat__ = 'reStructuredText'


def word_product(n, word):
    """
    Returns the product of the call matrices of *word*, computed by explicit
    matrix multiplication.
    """
    return reduce(mat_mul, (call_matrix(n, pair) for pair in word),
                  BoolMatrix.identity(n))

def _product_or_none(n, word):
    try:
        return word_product(n, word)
    except GossipError as error:
        logger.get_logger('solvers.verification').debug(
            'witness rejected: %s', error)
        return None

def verify_transformation(x, y, word):
    """
    Returns `True` if :math:`X C_1 \\cdots C_q = Y` for the calls of *word*.
    """
    if x.n != y.n:
        return False
    g = _product_or_none(x.n, word)
    return g is not None and mat_mul(x, g) == y

def verify_membership(a, word):
    """
    Returns `True` if the calls of *word* multiply to *a*.
    """
    return _product_or_none(a.n, word) == a

def verify_j_order(x, y, left, right):
    """
    Returns `True` if :math:`UYV = X` where *left* multiplies to :math:`U` and
    *right* multiplies to :math:`V`.
    """
    if x.n != y.n:
        return False
    u = _product_or_none(y.n, left)
    v = _product_or_none(y.n, right)
    return u is not None and v is not None \
        and mat_mul(mat_mul(u, y), v) == x

def verify_dominating_set(h, k, vertices):
    """
    Returns `True` if *vertices* is a set of at most *k* vertices of *h* and
    every vertex of *h* is in it or adjacent to one of its members.
    """
    vertices = set(vertices)
    if len(vertices) > k or not vertices <= set(h.nodes()):
        return False
    covered = set(vertices)
    for vertex in vertices:
        covered.update(h.adj[vertex])
    return covered == set(h.nodes())
