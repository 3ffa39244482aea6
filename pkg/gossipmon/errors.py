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
Contains the exception classes raised by the toolkit.

Negative answers are never exceptions: a solver that proves a *no* answer
returns an outcome with the
:attr:`gossipmon.search.Status.PROVEN_ABSENT` status.  The exceptions below
signal inputs that do not form an instance at all, or certificates that do
not verify.
"""


__docformat__ = 'reStructuredText'


class GossipError(Exception):
    """
    The base class of all exceptions raised by the toolkit.
    """


class DimensionError(GossipError, ValueError):
    """
    Raised when matrices (or a matrix and a call) of different dimensions are
    combined.
    """


class OutOfRangeError(GossipError, ValueError):
    """
    Raised when an index, a dimension or a size parameter lies outside of its
    admissible range.
    """


class BudgetError(GossipError, ValueError):
    """
    Raised when a search budget is not positive or when an enumeration would
    exceed its configured dimension cap.
    """


class MalformedInstanceError(GossipError, ValueError):
    """
    Raised when an input violates the promise of a decision problem (the
    maximal column condition, or membership of both sides of a
    :math:`\\mathcal{J}`-order question).  This is distinct from a *no*
    answer.
    """


class ParseError(GossipError, ValueError):
    """
    Raised when a text file does not follow its format.
    """

    def __init__(self, message, line=None):
        """
        *Parameters*:
            - **message** (`str`): a description of the problem;
            - **line** (`int`): the 1-based number of the offending line, if
              known.
        """
        self.reason = message
        self.line = line
        if line is not None:
            message = 'line %d: %s' % (line, message)
        super(ParseError, self).__init__(message)


class InvalidWitnessError(GossipError, ValueError):
    """
    Raised when a witness passed as an input does not satisfy the
    precondition of the operation it is given to.
    """


class StructuralError(GossipError):
    """
    Raised when a witness extracted from a reduced instance does not have the
    structure that every witness of a correctly reduced instance has.
    """

    def __init__(self, claim, message):
        """
        *Parameters*:
            - **claim** (`str`): a short tag naming the violated structural
              property;
            - **message** (`str`): a description of the violation.
        """
        super(StructuralError, self).__init__('[%s] %s' % (claim, message))
        self.claim = claim


class VerificationError(GossipError, AssertionError):
    """
    Raised when a constructed certificate fails its mandatory multiply-out
    check.
    """
